#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace fcc;
using testutil::W;

namespace {

FunctionSpec lin3() { return testutil::load_linear("lin3_f.txt"); }

std::int64_t as_int(const FunctionValue& v) { return std::get<std::int64_t>(v); }

}  // namespace

TEST(Evaluate, BuiltinKinds) {
  const auto p = RingParams::make(2);
  EXPECT_EQ(as_int(FunctionSpec::hom_weight(p, 3)(W(2, {1, 2, 3}))), 4);
  EXPECT_EQ(as_int(FunctionSpec::weight_distribution(p, 3, 3)(W(2, {1, 2, 3}))), 1);
  EXPECT_EQ(as_int(FunctionSpec::modular_sum(p, 3)(W(2, {1, 2, 3}))), 2);
  EXPECT_EQ(std::get<Word>(lin3()(W(2, {1, 0, 0}))), W(2, {1, 0}));
  EXPECT_EQ(std::get<Word>(lin3()(W(2, {2, 0, 0}))), W(2, {2, 0}));
}

TEST(Evaluate, Errors) {
  const auto p = RingParams::make(2);
  EXPECT_THROW(FunctionSpec::weight_distribution(p, 2, 0), Error);
  EXPECT_THROW(FunctionSpec::hom_weight(p, 2)(W(2, {1})), Error);
  EXPECT_THROW(FunctionSpec::hom_weight(p, 2)(W(3, {1, 1})), Error);
  EXPECT_THROW(FunctionSpec::table(p, 1, {std::int64_t{0}, std::int64_t{1}}), Error);
}

TEST(Image, ClosedFormsMatchTabulation) {
  for (int s = 1; s <= 3; ++s)
    for (std::size_t k = 1; static_cast<int>(k) * s <= 8; ++k) {
      const auto p = RingParams::make(s);
      for (const auto& f : {FunctionSpec::hom_weight(p, k), FunctionSpec::weight_distribution(p, k, 2),
                            FunctionSpec::weight_distribution(p, k, 3), FunctionSpec::modular_sum(p, k)}) {
        EXPECT_EQ(image(f), tabulate(f).image) << f.describe() << " s=" << s << " k=" << k;
      }
    }
}

TEST(Image, Bounds) {
  const auto p = RingParams::make(2);
  const auto img = image(FunctionSpec::hom_weight(p, 3));
  EXPECT_EQ(img.size(), 7u);
  EXPECT_EQ(as_int(img.back()), 6);
  EXPECT_EQ(as_int(image(FunctionSpec::weight_distribution(p, 3, 4)).back()), 1);
  EXPECT_EQ(image(lin3()).size(), 16u);
}

TEST(AnalyzeLinear, Lin3Kernel) {
  const auto a = analyze_linear(lin3());
  EXPECT_EQ(a.kernel_size, 4u);
  EXPECT_EQ(a.kernel_weight_sum, 12);
  EXPECT_TRUE(a.surjective);
  const std::vector<Word> expected{W(2, {0, 0, 0}), W(2, {1, 3, 1}), W(2, {2, 2, 2}), W(2, {3, 1, 3})};
  EXPECT_EQ(a.kernel, expected);
}

TEST(AnalyzeLinear, AgreesWithOracle) {
  const std::vector<std::vector<oracle::Vec>> matrices{
      {{1, 1, 0}, {0, 1, 1}}, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}, {{2, 2}}, {{1, 1}}, {{2, 0, 2}, {0, 2, 0}}, {{1, 3, 2}}};
  for (int s : {2, 3}) {
    for (const auto& rows : matrices) {
      const std::size_t k = rows.front().size();
      if (static_cast<int>(k) * s > 9) continue;
      std::vector<std::vector<Symbol>> m;
      for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
      const auto f = FunctionSpec::linear(Matrix::from_rows(RingParams::make(s), m));
      const auto a = analyze_linear(f);
      const auto ker = oracle::kernel(rows, static_cast<int>(k), s);
      EXPECT_EQ(a.kernel_size, ker.size());
      long sum = 0;
      for (const auto& u : ker) sum += oracle::weight(u, s);
      EXPECT_EQ(a.kernel_weight_sum, sum);
      std::set<oracle::Vec> img;
      for (const auto& x : oracle::space(s, static_cast<int>(k))) img.insert(oracle::apply(rows, x, s));
      EXPECT_EQ(a.image_size, img.size());
      EXPECT_EQ(a.surjective, img.size() == (1u << (s * static_cast<int>(rows.size()))));
      if (a.surjective) EXPECT_EQ(a.kernel_size, 1u << (s * static_cast<int>(k - rows.size())));
    }
  }
}

TEST(AnalyzeLinear, BijectiveAndModularSum) {
  const auto inv = testutil::load_linear("invertible_f.txt");
  const auto a = analyze_linear(inv);
  EXPECT_EQ(a.kernel_size, 1u);
  EXPECT_EQ(a.kernel_weight_sum, 0);
  const auto ms = analyze_linear(FunctionSpec::modular_sum_as_linear(RingParams::make(2), 2));
  EXPECT_EQ(ms.kernel, (std::vector<Word>{W(2, {0, 0}), W(2, {1, 3}), W(2, {2, 2}), W(2, {3, 1})}));
  EXPECT_EQ(ms.kernel_weight_sum, 8);
  EXPECT_THROW(analyze_linear(FunctionSpec::hom_weight(RingParams::make(2), 2)), Error);
}

TEST(Linear, HomomorphismExhaustive) {
  const auto f = lin3();
  const auto words = all_words(f.params(), f.k());
  for (const auto& x : words) {
    for (const auto& y : words) EXPECT_EQ(std::get<Word>(f(x + y)), std::get<Word>(f(x)) + std::get<Word>(f(y)));
    for (Symbol c = 0; c < 4; ++c) EXPECT_EQ(std::get<Word>(f(x.scaled(c))), std::get<Word>(f(x)).scaled(c));
  }
}

TEST(Linear, FibersAreCosets) {
  const auto f = lin3();
  const auto table = tabulate(f);
  std::vector<int> counts(table.image.size(), 0);
  for (auto id : table.value_id) ++counts[id];
  for (int c : counts) EXPECT_EQ(c, 4);
}

TEST(TableFormat, ParseAndRoundTrip) {
  const auto f = testutil::load_table("local42.txt", 2);
  EXPECT_EQ(f.kind(), FunctionKind::Table);
  EXPECT_EQ(f.k(), 2u);
  EXPECT_EQ(as_int(f(W(2, {2, 2}))), 3);
  EXPECT_EQ(as_int(f(W(2, {1, 3}))), 2);
  const auto again = parse_table_function(format_table_function(f), f.params());
  EXPECT_EQ(again.table_values(), f.table_values());
}

TEST(TableFormat, TupleValues) {
  const auto f = parse_table_function("0;(1,2)\n1;(0,0)\n2;(1,2)\n3;(3,3)\n", RingParams::make(2));
  EXPECT_EQ(std::get<Word>(f(W(2, {2}))), W(2, {1, 2}));
  EXPECT_EQ(image(f).size(), 3u);
}

TEST(TableFormat, Errors) {
  const auto p = RingParams::make(2);
  const auto kind_of = [&](const std::string& text) -> std::optional<ErrorKind> {
    try {
      parse_table_function(text, p);
    } catch (const Error& e) {
      return e.kind();
    }
    return std::nullopt;
  };
  EXPECT_EQ(kind_of("0;1\n1;1\n2;0\n"), ErrorKind::Integrity);
  EXPECT_EQ(kind_of("0;1\n1;1\n2;0\n3\n"), ErrorKind::Parse);
  EXPECT_EQ(kind_of("0;1\n0;1\n2;0\n3;1\n"), ErrorKind::Parse);
  EXPECT_EQ(kind_of("0;1\n1;x\n2;0\n3;1\n"), ErrorKind::Parse);
  EXPECT_EQ(kind_of("0;1\n1;(1,2)\n2;0\n3;1\n"), ErrorKind::Parse);
  EXPECT_EQ(kind_of("0;1\n1;1\n2;0\n7;1\n"), ErrorKind::Domain);
}

TEST(MatrixFormat, ParseAndRoundTrip) {
  const Matrix g = parse_matrix(fcc::read_file(testutil::data_path("lin3_G.txt")));
  EXPECT_EQ(g.rows(), 2u);
  EXPECT_EQ(g.cols(), 3u);
  EXPECT_EQ(g.row(1), W(2, {0, 2, 2}));
  EXPECT_EQ(parse_matrix(format_matrix(g)).to_rows(), g.to_rows());
  EXPECT_THROW(parse_matrix("2 3 2\n1 1 0\n0 1"), Error);
  EXPECT_THROW(parse_matrix("2 2 1\n1 4"), Error);
  EXPECT_THROW(parse_matrix("2 2 1\n1 1 1"), Error);
}

TEST(ParseWord, Positions) {
  EXPECT_EQ(parse_word("1, 2,3", RingParams::make(2)), W(2, {1, 2, 3}));
  try {
    parse_word("1,x,3", RingParams::make(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    EXPECT_NE(std::string(e.what()).find("x"), std::string::npos);
  }
}
