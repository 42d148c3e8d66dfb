#include <gtest/gtest.h>

#include "oracles.hpp"
#include "weave/diagram_io.hpp"
#include "weave/errors.hpp"

namespace weave {
namespace {

TEST(DiagramIO, RoundTripWithTags) {
  for (const auto& entry : testing::load_corpus()) {
    const auto text = format_diagram(entry.diagram, true);
    EXPECT_EQ(parse_diagram(text), entry.diagram) << entry.name;
  }
}

TEST(DiagramIO, CommentsAndBlankLines) {
  const auto d = parse_diagram("# cell\n\ngenus 1\ncrossing c0 over=02\n\nedge c0.0 c0.2 word=a\nedge c0.1 c0.3 word=b\n");
  EXPECT_EQ(d.crossing_count(), 1);
  EXPECT_EQ(d.crossings()[0].over, OverAxis::Axis02);
}

TEST(DiagramIO, FreeLoops) {
  const auto d = parse_diagram("genus 1\nloop word=ab tag=3\n");
  ASSERT_EQ(d.loops().size(), 1u);
  EXPECT_EQ(d.loops()[0].tag, 3);
  EXPECT_EQ(parse_diagram(format_diagram(d, true)), d);
}

TEST(DiagramIO, Errors) {
  EXPECT_THROW(parse_diagram("genus 1\ncrossing c1 over=13\n"), ParseError);
  EXPECT_THROW(parse_diagram("genus 1\ncrossing c0 over=12\n"), ParseError);
  EXPECT_THROW(parse_diagram("genus 1\nfrobnicate\n"), ParseError);
  EXPECT_THROW(parse_diagram("genus 1\ncrossing c0 over=13\nedge c0.0 c0.9 word=\n"), ParseError);
}

TEST(Corpus, SizeAndGenera) {
  const auto corpus = testing::load_corpus();
  EXPECT_GE(corpus.size(), 20u);
  int g2 = 0;
  for (const auto& e : corpus) {
    EXPECT_LE(e.diagram.crossing_count(), 16) << e.name;
    if (e.diagram.genus() == 2) ++g2;
  }
  EXPECT_GT(g2, 0);
}

}  // namespace
}  // namespace weave
