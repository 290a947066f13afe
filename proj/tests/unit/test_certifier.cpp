#include "test_util.hpp"

#include "qfrob/certificate.hpp"
#include "qfrob/support.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace qfrob;

namespace {

SpinorMultiplicityMatrix matrix(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  SpinorMultiplicityMatrix u;
  u.value = {{{a, b}, {c, d}}};
  return u;
}

}  // namespace

TEST_CASE("support predicate examples") {
  CHECK(line_in_pushforward_O(3, 2, 1, 0, 0));
  CHECK_FALSE(line_in_pushforward_O(3, 2, 1, 0, 3));
  CHECK(line_in_pushforward_O(3, 2, 1, -4, 3));
  // Window [2, 3] for j + 3t: only t = 1, matching S(-1) in the solved F_* O.
  for (int t = -5; t <= 5; ++t) CHECK(spinor_in_pushforward_O(3, 2, 1, 0, t) == (t == 1));
  for (int t = -5; t <= 5; ++t) CHECK_FALSE(spinor_in_pushforward_O(3, 2, 1, -2, t));
  CHECK(spinor_in_pushforward_O(3, 2, 3, 0, 2));
  CHECK(spinor_in_pushforward_O(3, 2, 2, 0, 1));
  CHECK(spinor_in_pushforward_S(3, 2, 1, -2, 2));
  for (int t = -5; t <= 5; ++t)
    if (t != 2) CHECK_FALSE(spinor_in_pushforward_S(3, 2, 1, -2, t));
  CHECK_FALSE(line_in_pushforward_S(3, 2, 1, 0, 0));
  CHECK(error_kind([] { line_in_pushforward_O(2, 2, 1, 0, 0); }) == ErrorKind::Unsupported);
  CHECK(error_kind([] { spinor_in_pushforward_S(3, 1, 1, 0, 0); }) == ErrorKind::Unsupported);
  CHECK(error_kind([] { line_in_pushforward_S(3, 2, 0, 0, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("predicted support sets") {
  const auto pred = predict_support(line(2, -2), 3, 1);
  CHECK(pred.spinor_twists.empty());
  CHECK(pred.line_twists == std::set<std::int64_t>{1, 2, 3});
  CHECK(predict_support(spinor_sum(2, -2), 3, 1).spinor_twists == std::set<std::int64_t>{2});
}

TEST_CASE("threshold examples and the least-e characterization") {
  CHECK(lemma42_threshold(3, 2) == 3);
  CHECK(lemma42_threshold(5, 2) == 2);
  CHECK(lemma42_threshold(3, 5) == 2);
  for (std::uint32_t p : {3u, 5u, 7u})
    for (int m = 2; m <= 6; ++m) {
      int least = 1;
      while (!spinor_in_pushforward_O(p, m, least, 0, m)) ++least;
      CHECK(lemma42_threshold(p, m) == least);
      // From the threshold on, t = m - 1 and t = m lie in the window; for p > m - 1
      // they are the only ones, otherwise the window is wider than one step.
      for (int e = least; e <= least + 3; ++e)
        for (int t = m - 3; t <= m + 2; ++t) {
          const bool hit = spinor_in_pushforward_O(p, m, e, 0, t);
          if (t == m || t == m - 1)
            CHECK(hit);
          else if (static_cast<int>(p) > m - 1)
            CHECK_FALSE(hit);
        }
    }
}

TEST_CASE("extension shapes") {
  CHECK(analyze_extension_shape({2, 3, 1, 3, 3, 1, 1, 0}).splits);
  const ShapeVerdict v = analyze_extension_shape({2, 1, 1, 1, 1, 1, 0, 2});
  CHECK(v.rho == 2);
  CHECK_FALSE(v.splits);
  CHECK(analyze_extension_shape({2, 0, 0, 0, 0, 0, 0, 0}).splits);
  CHECK(error_kind([] { analyze_extension_shape({2, 1, 0, 0, 0, 0, 0, 0}); }) == ErrorKind::Malformed);
}

TEST_CASE("forcing examples") {
  const auto inv = matrix(10, 1, 1, 10);
  CHECK(key_lemma2_force(inv, 3, 3, 3));
  CHECK_FALSE(key_lemma2_force(inv, 1, 2, 1));
  const auto equal = matrix(2, 2, 2, 2);
  CHECK(key_lemma2_force(equal, 1, 0, 2));
  CHECK(error_kind([] { key_lemma2_force(matrix(1, 2, 3, 1), 1, 1, 1); }) == ErrorKind::PreconditionFailed);
  CHECK(error_kind([] { key_lemma2_force(matrix(0, 0, 0, 0), 1, 1, 1); }) == ErrorKind::PreconditionFailed);
  CHECK_FALSE(kernel_forces_sum_zero(matrix(1, 2, 2, 4)));
}

TEST_CASE("forcing: exhaustive over small symmetric matrices") {
  std::size_t checked = 0;
  for (std::uint64_t a = 0; a <= 5; ++a)
    for (std::uint64_t b = 0; b <= 5; ++b)
      for (std::uint64_t d = 0; d <= 5; ++d) {
        const auto u = matrix(a, b, b, d);
        if (!u.nonzero()) continue;
        // Brute-force kernel search over small integer vectors.
        bool kernel_off_line = false;
        for (int x = -12; x <= 12; ++x)
          for (int y = -12; y <= 12; ++y) {
            const long long r0 = static_cast<long long>(a) * x + static_cast<long long>(b) * y;
            const long long r1 = static_cast<long long>(b) * x + static_cast<long long>(d) * y;
            if (r0 == 0 && r1 == 0 && x + y != 0) kernel_off_line = true;
          }
        CHECK(kernel_forces_sum_zero(u) == !kernel_off_line);
        for (std::uint64_t al = 0; al <= 5; ++al)
          for (std::uint64_t ap = 0; ap <= 5; ++ap)
            for (std::uint64_t am = 0; am <= 5; ++am) {
              const long long x = static_cast<long long>(al) - static_cast<long long>(ap);
              const long long y = static_cast<long long>(al) - static_cast<long long>(am);
              const bool in_kernel = static_cast<long long>(a) * x + static_cast<long long>(b) * y == 0 &&
                                     static_cast<long long>(b) * x + static_cast<long long>(d) * y == 0;
              const bool sum_ok = ap + am == 2 * al;
              const bool got = key_lemma2_force(u, al, ap, am);
              CHECK(got == (in_kernel && sum_ok));
              if (!sum_ok) CHECK_FALSE(got);
              // When the kernel lies on the sum-zero line, membership alone forces the sum.
              if (kernel_forces_sum_zero(u) && in_kernel) CHECK(sum_ok);
              ++checked;
            }
      }
  CHECK(checked > 40000);
}

TEST_CASE("certificate for p = 3, m = 2") {
  const Certificate c = certify_non_d_affine(3, 2, 4);
  CHECK(c.certified());
  CHECK(c.verdict() == "CERTIFIED");
  CHECK(c.e0 == 3);
  REQUIRE(c.premises.size() == 6);
  for (const auto& pr : c.premises) CHECK(pr.passed);
  const auto j = to_json(c);
  CHECK(j["verdict"] == "CERTIFIED");
  CHECK(j["premises"].size() == 7);
  CHECK(j["premises"][6]["status"] == "paper-supplied");
  CHECK(j["u"] == nlohmann::ordered_json::parse("[[10,1],[1,10]]"));
  CHECK(to_json(certify_non_d_affine(3, 2, 4)).dump() == j.dump());
}

TEST_CASE("certificate errors") {
  CHECK(error_kind([] { certify_non_d_affine(2, 2, 4); }) == ErrorKind::Unsupported);
  CHECK(error_kind([] { certify_non_d_affine(3, 1, 4); }) == ErrorKind::Unsupported);
  CHECK(error_kind([] { certify_non_d_affine(3, 2, 1); }) == ErrorKind::Unsupported);
  CHECK(error_kind([] { certify_non_d_affine(9, 2, 4); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("failed premise names the verdict") {
  Certificate c;
  c.premises.push_back({"first", "", true, {}});
  c.premises.push_back({"second", "", false, {}});
  CHECK(c.verdict() == "FAILED(second)");
  CHECK_FALSE(c.certified());
  CHECK(Certificate{}.verdict() == "FAILED(empty)");
}
