#include <gtest/gtest.h>

#include <sstream>

#include "wpo/records.hpp"

namespace {

std::string run_text(unsigned m, std::uint64_t n) {
  std::ostringstream os;
  wpo::write_run(os, wpo::generate(m, 2, n));
  return os.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string join(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += l + '\n';
  return s;
}

wpo::RunReport verify_text(const std::string& text) {
  std::istringstream in(text);
  return wpo::verify_run(wpo::read_run(in));
}

TEST(Records, Header) {
  auto lines = lines_of(run_text(2, 3));
  ASSERT_GE(lines.size(), 7u);
  EXPECT_EQ(lines[0], "# wpo badseq v1");
  EXPECT_EQ(lines[1], "# m=2 K=2 limit=3 seed=0");
  EXPECT_EQ(lines[2], "# start=w^(w+2)");
  EXPECT_EQ(lines[3], "# length_bound=H_{w^(w+2)}(2)-2");
  EXPECT_EQ(lines[4].substr(0, 12), "1\tw^(w+1)*2\t");
}

TEST(Records, RoundTripAndVerify) {
  for (unsigned m : {2u, 3u}) {
    const auto text = run_text(m, 40);
    std::istringstream in(text);
    auto parsed = wpo::read_run(in);
    auto original = wpo::generate(m, 2, 40);
    ASSERT_EQ(parsed.run.records.size(), 40u);
    for (std::size_t k = 0; k < 40; ++k) {
      EXPECT_EQ(parsed.run.records[k].alpha, original.records[k].alpha);
      EXPECT_EQ(parsed.run.records[k].d, original.records[k].d);
    }
    std::ostringstream again;
    wpo::write_run(again, parsed.run);
    EXPECT_EQ(again.str(), text);
    auto rep = wpo::verify_run(parsed);
    EXPECT_TRUE(rep.ok()) << rep.violations.front();
    EXPECT_EQ(rep.pairs, 780u);
  }
}

TEST(Records, DuplicatedRecordIsCaught) {
  auto lines = lines_of(run_text(2, 10));
  lines.insert(lines.begin() + 8, lines[7]);
  auto rep = verify_text(join(lines));
  ASSERT_FALSE(rep.ok());
  bool pair_flagged = false;
  for (const auto& v : rep.violations) pair_flagged = pair_flagged || v.find("non-inclusion fails at (4,5)") != std::string::npos;
  EXPECT_TRUE(pair_flagged);
}

TEST(Records, TamperedFieldIsCaught) {
  auto lines = lines_of(run_text(2, 10));
  auto& l = lines[6];  // record 3
  auto tab = l.rfind('\t');
  l = l.substr(0, tab + 1) + "1";
  auto rep = verify_text(join(lines));
  ASSERT_FALSE(rep.ok());
  EXPECT_NE(rep.violations.front().find("record 3 (line 7): bound should be 25"), std::string::npos)
      << rep.violations.front();
}

TEST(Records, MalformedLinesReportTheirNumber) {
  auto lines = lines_of(run_text(2, 5));
  auto bad = lines;
  bad[5] = "2\tw^(w+1\t[1,w]\t1\t1\t(1,0)\t1\t16";
  try {
    verify_text(join(bad));
    FAIL() << "expected a format error";
  } catch (const wpo::record_format_error& e) {
    EXPECT_EQ(e.line(), 6u);
  }
  auto short_line = lines;
  short_line[7] = "4\tw";
  EXPECT_THROW(verify_text(join(short_line)), wpo::record_format_error);
  EXPECT_THROW(verify_text("not a record file\n"), wpo::record_format_error);
  EXPECT_THROW(verify_text(""), wpo::record_format_error);
}

}  // namespace
