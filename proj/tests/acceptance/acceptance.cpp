// Acceptance suite: one line per criterion, each timed against its limit.
// Usage: trigonal_acceptance [--skip-optional]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cli.hpp"
#include "trigonal/correspondence.hpp"
#include "trigonal/lattice.hpp"
#include "trigonal/monodromy.hpp"
#include "trigonal/sp_order.hpp"
#include "trigonal/symplectic.hpp"

using namespace trigonal;

namespace {

struct Outcome {
  bool ok = false;
  std::string summary;
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
  bool optional = false;
};

std::string str(std::size_t n) { return std::to_string(n); }

Outcome monodromy_count() {
  const auto e = enumerate_classes();
  return {e.classes.size() == 29524 && e.raw_count == 177144,
          "classes " + str(e.classes.size()) + ", raw tuples " + str(e.raw_count)};
}

Outcome projective_count() {
  const auto pts = enumerate_proj();
  return {pts.size() == 29524, "points " + str(pts.size())};
}

Outcome triflection_algebra() {
  bool ok = true;
  for (int i = 1; i <= kRank; ++i) {
    const auto s = triflection(i);
    ok = ok && s.order() == 3 && s.preserves_form();
    for (int k = 1; k <= kRank; ++k)
      ok = ok && divides(EisensteinInt(3), (EisensteinInt::one() - EisensteinInt::tau() * EisensteinInt::tau()) *
                                               herm(LatticeVector::basis(k), LatticeVector::basis(i)));
  }
  for (int i = 1; i <= kRank; ++i)
    for (int j = i + 1; j <= kRank; ++j) {
      const auto a = triflection(i), b = triflection(j);
      ok = ok && (j == i + 1 ? compose(a, compose(b, a)) == compose(b, compose(a, b)) : compose(a, b) == compose(b, a));
    }
  return {ok, ok ? "order 3, unitary, integral, braid relations exact" : "a matrix identity failed"};
}

Outcome mod_theta() {
  int commuting = 0;
  for (int i = 1; i <= kRank; ++i)
    for (int k = 1; k <= kRank; ++k)
      commuting += reduce_vector(triflect(i, LatticeVector::basis(k))) == transvect(i, F3Vector::basis(k));
  const auto& form = SympForm::standard();
  return {commuting == 100 && form.is_alternating() && form.rank() == 10,
          "commuting squares " + std::to_string(commuting) + "/100, alternating " +
              (form.is_alternating() ? "yes" : "no") + ", rank " + std::to_string(form.rank())};
}

Outcome hurwitz_action() {
  const ClassTable table;
  const auto action = table.hurwitz_action();
  bool ok = true;
  for (int g = 1; g <= kRank; ++g) {
    const auto& p = action.generator(g);
    ok = ok && p.after(p).after(p).is_identity() && p.fixed_point_count() > 0 && p.fixed_point_count() < p.degree();
  }
  for (int i = 1; i <= kRank; ++i)
    for (int j = i + 1; j <= kRank; ++j) {
      const auto& a = action.generator(i);
      const auto& b = action.generator(j);
      ok = ok && (j == i + 1 ? a.after(b).after(a) == b.after(a).after(b) : a.after(b) == b.after(a));
    }
  std::mt19937_64 rng(0);
  std::string sizes;
  for (int s = 0; s < 4; ++s) {
    const auto seed = s == 0 ? alternating_class() : table.at(static_cast<Point>(rng() % table.size()));
    const auto n = orbit_R(table, action, seed).size();
    ok = ok && n == 29524;
    sizes += (s ? "," : "") + str(n);
  }
  return {ok, "orbit sizes " + sizes};
}

Outcome symplectic_transitivity() {
  const ProjectiveSpace space;
  const Point p0 = 0;
  const auto proj = orbit(std::span<const Point>(&p0, 1), space.transvection_action()).size();
  const Point v0 = 0;
  const auto vec = orbit(std::span<const Point>(&v0, 1), transvection_vector_action()).size();
  return {proj == 29524 && vec == 59048, "projective orbit " + str(proj) + ", vector orbit " + str(vec)};
}

Outcome equivariant_bijection() {
  const ProjectiveSpace space;
  const ClassTable classes;
  const auto actions = BraidActions::build(space, classes);
  const auto corr = build_bijection(space, classes, actions);
  const auto check = verify_equivariance(corr.forward, actions);
  bool inverse = corr.backward.size() == corr.forward.size();
  for (Point p = 0; inverse && p < corr.forward.size(); ++p) inverse = corr.backward[corr.forward[p]] == p;
  return {check.ok() && check.edges_checked == 295240 && inverse,
          "edges " + str(check.ok() ? check.edges_checked : 0) + "/295240, inverse " + (inverse ? "yes" : "no") +
              ", candidates verified " + str(corr.candidates_verified)};
}

Outcome orbit_trichotomy() {
  const ProjectiveSpace space;
  const ClassTable classes;
  const auto actions = BraidActions::build(space, classes);
  const auto corr = build_bijection(space, classes, actions);
  const auto s = stabilizer_orbit_sizes(space, space.point(corr.backward[corr.base_class]));
  const auto r = cross_validate_classification(corr, space, classes);
  const bool sizes = s.h == 1 && s.rm == 9840 && s.sg == 19683 && s.total() == 29524;
  const auto RM = static_cast<std::size_t>(Confluence::RM);
  const auto SG = static_cast<std::size_t>(Confluence::SG);
  return {sizes && r.all_agree() && r.checks == 295240,
          "orbits H:" + str(s.h) + " RM:" + str(s.rm) + " SG:" + str(s.sg) + ", agreements " + str(r.agreements) +
              "/" + str(r.checks) + " (combinatorial RM vs line SG " + str(r.counts[RM][SG]) +
              ", combinatorial SG vs line RM " + str(r.counts[SG][RM]) + ")"};
}

Outcome realification() {
  const auto c = realify_and_certify();
  return {c.is_even && c.abs_det == 1 && c.positive == 18 && c.negative == 2 && c.zero == 0,
          std::string("even ") + (c.is_even ? "yes" : "no") + ", |det| " + std::to_string(c.abs_det) +
              ", signature (" + std::to_string(c.positive) + "," + std::to_string(c.negative) + ")"};
}

Outcome minus6() {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<int> length(0, 8), gen(1, kRank), power(1, 2);
  const auto eps0 = LatticeVector::basis(1) + LatticeVector::basis(2);
  int good = 0;
  constexpr int kSamples = 100;
  for (int s = 0; s < kSamples; ++s) {
    auto eps = eps0;
    for (int k = length(rng); k > 0; --k) {
      const int g = gen(rng);
      eps = triflect(g, eps, power(rng));
    }
    const auto split = decompose_minus6(eps);
    good += split && split->first + split->second == eps && herm(split->first, split->first) == EisensteinInt(-3) &&
            herm(split->second, split->second) == EisensteinInt(-3) &&
            herm(split->first, split->second) == EisensteinInt::theta();
  }
  const auto w = check_minus6_reflection_nonintegral(eps0);
  const bool witness = w && w->x == LatticeVector::basis(3) && w->value == EisensteinInt::theta() &&
                       !divides(EisensteinInt(3), w->value);
  return {good == kSamples && witness, "decomposed " + std::to_string(good) + "/" + std::to_string(kSamples) +
                                           ", witness h(eps,a3) = theta " + (witness ? "yes" : "no")};
}

Outcome sp10_order() {
  const auto c = certify_transvection_group_order(0);
  return {c.certified(), "order " + c.order_lower_bound + " vs " + c.symplectic_order};
}

Outcome discrepancy_notes() {
  cli::Workbench bench;
  cli::VerifyOptions opts;
  opts.scope = cli::Scope::Monodromy;
  const auto text = cli::run_verification(opts, bench).to_json().dump();
  const auto note = [&](const char* s) { return text.find(nlohmann::json(s).dump()) != std::string::npos; };
  const ClassTable table;
  const auto orbit_size = orbit_R(table, table.hurwitz_action(), base_class()).size();
  const bool ok = note(cli::kIndexNote) && note(cli::kHExampleNote) && orbit_size == 29524 && orbit_size != 9841;
  return {ok, "orbit size " + str(orbit_size) + ", notes present " + (ok ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  bool skip_optional = false;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--skip-optional") == 0) {
      skip_optional = true;
    } else {
      std::fprintf(stderr, "usage: %s [--skip-optional]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "monodromy class count", 5, monodromy_count},
      {2, "projective point count", 5, projective_count},
      {3, "triflection algebra", 1, triflection_algebra},
      {4, "mod-theta compatibility", 1, mod_theta},
      {5, "Hurwitz action", 30, hurwitz_action},
      {6, "symplectic transitivity", 60, symplectic_transitivity},
      {7, "equivariant bijection", 120, equivariant_bijection},
      {8, "orbit trichotomy and cross-validation", 120, orbit_trichotomy},
      {9, "realification certificate", 1, realification},
      {10, "(-6)-vector certificates", 60, minus6},
      {11, "Sp10(F3) order", 300, sp10_order, true},
      {12, "discrepancy notes", 30, discrepancy_notes},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (c.optional && skip_optional) {
      std::printf("SKIP %2d  %s (optional)\n", c.id, c.title);
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%s %2d  %s: %s [%.3f s, limit %.0f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.title, o.summary.c_str(),
                secs, c.limit_s, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
