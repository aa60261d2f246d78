#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "trigonal/lattice.hpp"
#include "trigonal/serialize.hpp"
#include "trigonal/sp_order.hpp"

namespace trigonal::cli {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

bool VerificationReport::any_failed() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return true;
  return false;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

json VerificationReport::to_json() const {
  json list = json::array();
  for (const auto& c : checks) {
    json item = {{"name", c.name},
                 {"status", to_string(c.status)},
                 {"observed", c.observed},
                 {"expected", c.expected},
                 {"runtime_ms", c.runtime_ms}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    list.push_back(std::move(item));
  }
  return {{"header", header}, {"checks", std::move(list)}, {"notes", notes}, {"passed", !any_failed()}};
}

Scope parse_scope(const std::string& s) {
  if (s == "all") return Scope::All;
  if (s == "lattice") return Scope::Lattice;
  if (s == "symplectic") return Scope::Symplectic;
  if (s == "monodromy") return Scope::Monodromy;
  if (s == "correspondence") return Scope::Correspondence;
  throw UsageError("unknown scope '" + s + "' (expected all, lattice, symplectic, monodromy, correspondence)");
}

const ProjectiveSpace& Workbench::space() {
  std::call_once(space_once_, [this] {
    auto p = std::make_unique<ProjectiveSpace>();
    std::lock_guard lock(state_mutex_);
    space_ = std::move(p);
  });
  return *space_;
}

const ClassTable& Workbench::classes() {
  std::call_once(classes_once_, [this] {
    auto p = std::make_unique<ClassTable>();
    std::lock_guard lock(state_mutex_);
    classes_ = std::move(p);
  });
  return *classes_;
}

const BraidActions& Workbench::actions() {
  std::call_once(actions_once_,
                 [this] { actions_ = std::make_unique<BraidActions>(BraidActions::build(space(), classes())); });
  return *actions_;
}

const Correspondence& Workbench::correspondence() {
  std::call_once(corr_once_,
                 [this] { corr_ = std::make_unique<Correspondence>(build_bijection(space(), classes(), actions())); });
  return *corr_;
}

bool Workbench::has_space() const {
  std::lock_guard lock(state_mutex_);
  return space_ != nullptr;
}

bool Workbench::has_classes() const {
  std::lock_guard lock(state_mutex_);
  return classes_ != nullptr;
}

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.detail = std::string("exception: ") + e.what();
  }
  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return r;
}

void settle(CheckResult& r, bool ok) { r.status = ok ? Status::Pass : Status::Fail; }

json class_counts(const LineStratification& s) { return {{"H", s.h}, {"RM", s.rm}, {"SG", s.sg}}; }

// lattice suite

CheckResult check_triflection_algebra() {
  return timed("triflection_algebra", [](CheckResult& r) {
    int order3 = 0, unitary = 0, integral = 0, braid = 0, commute = 0, far_pairs = 0;
    const EisensteinInt one_minus_tau_sq = EisensteinInt::one() - EisensteinInt::tau() * EisensteinInt::tau();
    std::vector<UnitaryMatrix> s;
    for (int i = 1; i <= kRank; ++i) s.push_back(triflection(i));
    for (int i = 1; i <= kRank; ++i) {
      const auto& m = s[i - 1];
      order3 += m.order() == 3;
      unitary += m.preserves_form();
      bool ok = true;
      for (int k = 1; k <= kRank; ++k)
        ok = ok && divides(EisensteinInt(3, 0), one_minus_tau_sq * herm(LatticeVector::basis(k), LatticeVector::basis(i)));
      integral += ok;
    }
    for (int i = 1; i <= kRank; ++i)
      for (int j = i + 1; j <= kRank; ++j) {
        const auto& a = s[i - 1];
        const auto& b = s[j - 1];
        if (j == i + 1) {
          braid += compose(a, compose(b, a)) == compose(b, compose(a, b));
        } else {
          ++far_pairs;
          commute += compose(a, b) == compose(b, a);
        }
      }
    r.observed = {{"order_3", order3}, {"unitary", unitary}, {"integral", integral},
                  {"braid_adjacent", braid}, {"commuting_far", commute}};
    r.expected = {{"order_3", kRank}, {"unitary", kRank}, {"integral", kRank},
                  {"braid_adjacent", kRank - 1}, {"commuting_far", far_pairs}};
    settle(r, r.observed == r.expected);
  });
}

CheckResult check_realification() {
  return timed("realification", [](CheckResult& r) {
    const auto c = realify_and_certify();
    r.observed = {{"even", c.is_even}, {"abs_det", c.abs_det}, {"signature", {c.positive, c.negative}}, {"zero", c.zero}};
    r.expected = {{"even", true}, {"abs_det", 1}, {"signature", {18, 2}}, {"zero", 0}};
    settle(r, r.observed == r.expected);
  });
}

CheckResult check_minus6(std::uint64_t seed) {
  return timed("minus6_certificates", [seed](CheckResult& r) {
    constexpr int kSamples = 100;
    constexpr int kMaxWord = 8;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> length(0, kMaxWord), gen(1, kRank), power(1, 2);
    const LatticeVector eps0 = LatticeVector::basis(1) + LatticeVector::basis(2);
    int decomposed = 0;
    for (int s = 0; s < kSamples; ++s) {
      LatticeVector eps = eps0;
      const int len = length(rng);
      for (int k = 0; k < len; ++k) {
        const int g = gen(rng);
        eps = triflect(g, eps, power(rng));
      }
      const auto split = decompose_minus6(eps);
      if (!split) continue;
      const auto& [x, y] = *split;
      decomposed += x + y == eps && herm(x, x) == EisensteinInt(-3, 0) && herm(y, y) == EisensteinInt(-3, 0) &&
                    herm(x, y) == EisensteinInt::theta();
    }
    const auto w = check_minus6_reflection_nonintegral(eps0);
    const bool witness_ok = w && w->basis_index == 3 && w->value == EisensteinInt::theta() &&
                            !divides(EisensteinInt(3, 0), w->value);
    json witness = nullptr;
    if (w) witness = {{"basis_index", w->basis_index}, {"value", w->value}};
    r.observed = {{"samples", kSamples}, {"decomposed", decomposed}, {"witness", witness}};
    r.expected = {{"samples", kSamples},
                  {"decomposed", kSamples},
                  {"witness", {{"basis_index", 3}, {"value", EisensteinInt::theta()}}}};
    settle(r, decomposed == kSamples && witness_ok);
  });
}

// symplectic suite

CheckResult check_p_count(Workbench& bench) {
  return timed("P_count", [&bench](CheckResult& r) {
    r.observed = bench.space().size();
    r.expected = kProjCount;
    settle(r, r.observed == r.expected);
  });
}

CheckResult check_mod_theta() {
  return timed("mod_theta_compatibility", [](CheckResult& r) {
    int commuting = 0;
    for (int i = 1; i <= kRank; ++i)
      for (int k = 1; k <= kRank; ++k) {
        const auto x = LatticeVector::basis(k);
        commuting += reduce_vector(triflect(i, x)) == transvect(i, reduce_vector(x));
      }
    const auto& form = SympForm::standard();
    r.observed = {{"commuting_pairs", commuting}, {"alternating", form.is_alternating()}, {"rank", form.rank()}};
    r.expected = {{"commuting_pairs", kRank * kRank}, {"alternating", true}, {"rank", kRank}};
    settle(r, r.observed == r.expected);
  });
}

CheckResult check_symplectic_transitivity(Workbench& bench) {
  return timed("symplectic_transitivity", [&bench](CheckResult& r) {
    const Point p0 = 0;
    const auto proj = orbit(std::span<const Point>(&p0, 1), bench.space().transvection_action());
    const auto vectors = transvection_vector_action();
    const Point v0 = F3Vector::basis(1).code() - 1;
    const auto vec = orbit(std::span<const Point>(&v0, 1), vectors);
    r.observed = {{"projective_orbit", proj.size()}, {"vector_orbit", vec.size()}};
    r.expected = {{"projective_orbit", kProjCount}, {"vector_orbit", kNonzeroVectorCount}};
    settle(r, r.observed == r.expected);
  });
}

CheckResult check_sp10_order(bool enabled, std::uint64_t seed) {
  if (!enabled) {
    CheckResult r;
    r.name = "sp10_order";
    r.status = Status::Skipped;
    r.expected = symplectic_group_order(5, 3);
    r.detail = "enable with --optional";
    return r;
  }
  return timed("sp10_order", [seed](CheckResult& r) {
    const auto c = certify_transvection_group_order(seed);
    r.observed = {{"order_lower_bound", c.order_lower_bound},
                  {"generators_preserve_form", c.generators_preserve_form},
                  {"basic_orbit_lengths", c.basic_orbit_lengths},
                  {"sifts", c.sifts}};
    r.expected = {{"order", c.symplectic_order}};
    settle(r, c.certified());
  });
}

// monodromy suite

CheckResult check_r_count(Workbench& bench) {
  return timed("R_count", [&bench](CheckResult& r) {
    const auto& t = bench.classes();
    r.observed = t.size();
    r.expected = kClassCount;
    r.detail = "raw tuples before the conjugation quotient: " + std::to_string(t.raw_count()) + " (expected 177144)";
    settle(r, t.size() == kClassCount && t.raw_count() == 177144);
  });
}

CheckResult check_hurwitz(Workbench& bench, std::uint64_t seed) {
  return timed("hurwitz_action", [&bench, seed](CheckResult& r) {
    const auto& table = bench.classes();
    const auto action = table.hurwitz_action();
    int order_divides_3 = 0, with_fixed = 0, with_moved = 0, braid = 0, commute = 0, far_pairs = 0;
    for (int g = 1; g <= kRank; ++g) {
      const auto& p = action.generator(g);
      order_divides_3 += p.after(p).after(p).is_identity();
      const auto fixed = p.fixed_point_count();
      with_fixed += fixed > 0;
      with_moved += fixed < p.degree();
    }
    for (int i = 1; i <= kRank; ++i)
      for (int j = i + 1; j <= kRank; ++j) {
        const auto& a = action.generator(i);
        const auto& b = action.generator(j);
        if (j == i + 1) {
          braid += a.after(b).after(a) == b.after(a).after(b);
        } else {
          ++far_pairs;
          commute += a.after(b) == b.after(a);
        }
      }
    std::mt19937_64 rng(seed);
    std::vector<MonodromyClass> seeds{base_class(), alternating_class()};
    for (int k = 0; k < 3; ++k) seeds.push_back(table.at(static_cast<Point>(rng() % table.size())));
    json orbit_sizes = json::array();
    bool transitive = true;
    for (const auto& s : seeds) {
      const auto size = orbit_R(table, action, s).size();
      orbit_sizes.push_back(size);
      transitive = transitive && size == table.size();
    }
    r.observed = {{"order_divides_3", order_divides_3}, {"with_fixed_points", with_fixed},
                  {"with_3_cycles", with_moved},        {"braid_adjacent", braid},
                  {"commuting_far", commute},          {"orbit_sizes", orbit_sizes}};
    r.expected = {{"order_divides_3", kRank}, {"with_fixed_points", kRank},
                  {"with_3_cycles", kRank},   {"braid_adjacent", kRank - 1},
                  {"commuting_far", far_pairs}, {"orbit_size", kClassCount}};
    settle(r, order_divides_3 == kRank && with_fixed == kRank && with_moved == kRank && braid == kRank - 1 &&
                  commute == far_pairs && transitive);
  });
}

CheckResult check_discrepancy_notes(Workbench& bench) {
  return timed("discrepancy_notes", [&bench](CheckResult& r) {
    const auto& t = bench.classes();
    const auto orbit_size = orbit_R(t, t.hurwitz_action(), base_class()).size();
    // t0 = t1 = (12), t3..t11 = (23): which t2 satisfy the product relation
    json forced = json::array();
    for (auto t2 : {Transposition::T12, Transposition::T23, Transposition::T13}) {
      MonodromyTuple tuple{};
      tuple.fill(Transposition::T23);
      tuple[0] = tuple[1] = Transposition::T12;
      tuple[2] = t2;
      if (product_is_identity(tuple)) forced.push_back(static_cast<int>(t2));
    }
    r.observed = {{"orbit_size", orbit_size}, {"stated_index", 9841}, {"t2_solutions", forced}};
    r.expected = {{"orbit_size", kClassCount}, {"t2_solutions", json::array({static_cast<int>(Transposition::T23)})}};
    settle(r, orbit_size == kClassCount && forced == r.expected["t2_solutions"]);
  });
}

// correspondence suite

CheckResult check_bijection(Workbench& bench) {
  return timed("equivariant_bijection", [&bench](CheckResult& r) {
    const auto& corr = bench.correspondence();
    const auto check = verify_equivariance(corr.forward, bench.actions());
    bool inverse = corr.forward.size() == corr.backward.size();
    for (Point p = 0; inverse && p < corr.forward.size(); ++p) inverse = corr.backward[corr.forward[p]] == p;
    r.observed = {{"edges_verified", check.ok() ? check.edges_checked : 0},
                  {"mutually_inverse", inverse},
                  {"base_point", bench.space().point(corr.base_point).rep().to_string()},
                  {"candidates_after_pruning", corr.candidates_after_pruning},
                  {"candidates_verified", corr.candidates_verified}};
    r.expected = {{"edges_verified", kRank * kProjCount}, {"mutually_inverse", true}};
    settle(r, check.ok() && check.edges_checked == kRank * kProjCount && inverse);
  });
}

CheckResult check_trichotomy(Workbench& bench) {
  return timed("confluence_trichotomy", [&bench](CheckResult& r) {
    const auto& corr = bench.correspondence();
    const auto& space = bench.space();
    const auto strat = stabilizer_orbit_sizes(space, space.point(corr.base_point));
    const auto cv = cross_validate_classification(corr, space, bench.classes());
    json matrix = json::object();
    for (auto c : {Confluence::H, Confluence::RM, Confluence::SG}) {
      json row = json::object();
      for (auto s : {Confluence::H, Confluence::RM, Confluence::SG})
        row[std::string(to_string(s))] = cv.counts[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)];
      matrix[std::string(to_string(c))] = std::move(row);
    }
    r.observed = {{"orbit_sizes", class_counts(strat)},
                  {"agreements", cv.agreements},
                  {"checks", cv.checks},
                  {"positions", "1..10; positions 0 and 11 have no basis line and are not compared"},
                  {"combinatorial_vs_line", std::move(matrix)}};
    r.expected = {{"orbit_sizes", {{"H", 1}, {"RM", 9840}, {"SG", 19683}}},
                  {"agreements", kRank * kProjCount},
                  {"checks", kRank * kProjCount}};
    const bool sizes_ok = strat.h == 1 && strat.rm == 9840 && strat.sg == 19683;
    settle(r, sizes_ok && cv.all_agree() && cv.checks == kRank * kProjCount);
    if (cv.first_disagreement) {
      const auto& d = *cv.first_disagreement;
      r.detail = "first disagreement: class " + bench.classes().at(d.class_index).to_string() + " position " +
                 std::to_string(d.position) + ": combinatorial " + std::string(to_string(d.combinatorial)) +
                 ", line " + std::string(to_string(d.symplectic));
    }
  });
}

using Suite = std::function<std::vector<CheckResult>()>;

json report_header(const VerifyOptions& opts) {
  return {{"tool", "trigonal"},
          {"version", "0.1.0"},
          {"seed", opts.seed},
          {"optional", opts.optional},
          {"conventions",
           {{"eisenstein", "a + b*tau with tau^2 = tau - 1, encoded [a, b]; theta = -1 + 2*tau"},
            {"gram", "h(a_i,a_i) = -3, h(a_i,a_{i+1}) = theta, h(a_{i+1},a_i) = -theta; h linear in the first slot"},
            {"triflection", "s_i(x) = x + tau * h'(x,a_i) * a_i with h' = theta^{-1} h"},
            {"hurwitz", "move at (i,i+1) sends (u,v) to (v, v u v)"},
            {"transpositions", "(12) -> 0, (23) -> 1, (13) -> 2; classes in first-appearance canonical form"},
            {"projective", "first nonzero coordinate equal to 1; points ordered by base-3 code with entry 0 least significant, so [alpha_1] is point 0"},
            {"base_class", base_class().to_string()}}}};
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& opts, Workbench& bench) {
  const bool all = opts.scope == Scope::All;
  std::vector<Suite> suites;
  if (all || opts.scope == Scope::Monodromy)
    suites.push_back([&] {
      return std::vector{check_r_count(bench), check_hurwitz(bench, opts.seed), check_discrepancy_notes(bench)};
    });
  if (all || opts.scope == Scope::Symplectic)
    suites.push_back([&] {
      return std::vector{check_p_count(bench), check_mod_theta(), check_symplectic_transitivity(bench),
                         check_sp10_order(opts.optional, opts.seed)};
    });
  if (all || opts.scope == Scope::Lattice)
    suites.push_back([&] {
      return std::vector{check_triflection_algebra(), check_realification(), check_minus6(opts.seed)};
    });
  if (all || opts.scope == Scope::Correspondence)
    suites.push_back([&] { return std::vector{check_bijection(bench), check_trichotomy(bench)}; });

  std::vector<std::vector<CheckResult>> results(suites.size());
  if (opts.jobs > 1 && suites.size() > 1) {
    // Independent suites run concurrently; shared tables are built once.
    std::vector<std::future<std::vector<CheckResult>>> pending;
    std::size_t next = 0;
    while (next < suites.size() || !pending.empty()) {
      while (next < suites.size() && pending.size() < static_cast<std::size_t>(opts.jobs))
        pending.push_back(std::async(std::launch::async, suites[next++]));
      const std::size_t first = next - pending.size();
      results[first] = pending.front().get();
      pending.erase(pending.begin());
    }
  } else {
    for (std::size_t k = 0; k < suites.size(); ++k) results[k] = suites[k]();
  }

  // Fixed order by criterion, independent of completion order.
  static const std::vector<std::string> order{
      "R_count",          "P_count",         "triflection_algebra", "mod_theta_compatibility",
      "hurwitz_action",   "symplectic_transitivity", "equivariant_bijection", "confluence_trichotomy",
      "realification",    "minus6_certificates",     "sp10_order",            "discrepancy_notes"};
  VerificationReport report;
  report.header = report_header(opts);
  report.header["scope"] = [&] {
    switch (opts.scope) {
      case Scope::All: return "all";
      case Scope::Lattice: return "lattice";
      case Scope::Symplectic: return "symplectic";
      case Scope::Monodromy: return "monodromy";
      case Scope::Correspondence: return "correspondence";
    }
    return "all";
  }();
  for (const auto& name : order)
    for (auto& suite : results)
      for (auto& c : suite)
        if (c.name == name) report.checks.push_back(std::move(c));
  if (all || opts.scope == Scope::Monodromy) report.notes = {kIndexNote, kHExampleNote};
  return report;
}

ExportTarget parse_export_target(const std::string& s) {
  if (s == "bijection") return ExportTarget::Bijection;
  if (s == "orbits") return ExportTarget::Orbits;
  if (s == "gram") return ExportTarget::Gram;
  if (s == "classes") return ExportTarget::Classes;
  throw UsageError("unknown export target '" + s + "' (expected bijection, orbits, gram, classes)");
}

ExportFormat parse_export_format(const std::string& s) {
  if (s == "json") return ExportFormat::Json;
  if (s == "dot") return ExportFormat::Dot;
  throw UsageError("unknown format '" + s + "' (expected json or dot)");
}

std::string export_artifact(ExportTarget what, ExportFormat format, Workbench& bench) {
  if (format == ExportFormat::Dot && what != ExportTarget::Orbits)
    throw UsageError("dot format is only available for orbits");
  switch (what) {
    case ExportTarget::Gram: return dump(gram_json());
    case ExportTarget::Classes: return dump(classes_json(bench.classes()));
    case ExportTarget::Bijection: return dump(bijection_json(bench.correspondence(), bench.space(), bench.classes()));
    case ExportTarget::Orbits: {
      const auto& actions = bench.actions();
      const Point p0 = bench.correspondence().base_point;
      const Point r0 = bench.correspondence().base_class;
      const auto lattice = orbit(std::span<const Point>(&p0, 1), actions.lattice);
      const auto monodromy = orbit(std::span<const Point>(&r0, 1), actions.monodromy);
      if (format == ExportFormat::Dot)
        return orbit_dot(lattice, actions.lattice, "projective") + orbit_dot(monodromy, actions.monodromy, "monodromy");
      return dump({{"projective", orbit_json(lattice)}, {"monodromy", orbit_json(monodromy)}});
    }
  }
  throw UsageError("unknown export target");
}

ClassifyResult classify(const std::string& tuple, int position, bool cross_check, Workbench& bench) {
  if (position < 0 || position >= kBranchPoints) throw std::out_of_range("position must be in 0..11");
  const auto cls = MonodromyClass::parse(tuple);
  ClassifyResult result;
  result.canonical = cls.to_string();
  result.combinatorial = classify_confluence(cls, position);
  if (cross_check && position >= 1 && position <= kRank) {
    const auto& space = bench.space();
    const Point r = bench.classes().index_of(cls);
    const auto& ell = space.point(bench.correspondence().backward.at(r));
    result.symplectic = classify_line(ProjPoint(F3Vector::basis(position)), ell);
  }
  return result;
}

namespace {

// Writes text to path, or to out when path is empty.
bool emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open " << path << " for writing\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

}  // namespace

int cmd_verify(const VerifyOptions& opts, const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (opts.jobs < 1) {
    err << "error: --jobs must be at least 1\n";
    return kExitUsage;
  }
  Workbench bench;
  const auto report = run_verification(opts, bench);
  if (!emit(report.to_json().dump(2) + "\n", out_path, out, err)) return kExitUsage;
  for (const auto& c : report.checks)
    if (c.status == Status::Fail) err << "FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  return report.any_failed() ? kExitCheckFailed : kExitOk;
}

int cmd_export(const std::string& what, const std::string& format, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  std::string text;
  try {
    Workbench bench;
    text = export_artifact(parse_export_target(what), parse_export_format(format), bench);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n"
        << "usage: trigonal export {bijection,orbits,gram,classes} [--format json|dot] [--out PATH]\n";
    return kExitUsage;
  } catch (const NoEquivariantBijection& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return emit(text, out_path, out, err) ? kExitOk : kExitUsage;
}

int cmd_classify(const std::string& tuple, int position, bool cross_check, std::ostream& out, std::ostream& err) {
  try {
    Workbench bench;
    const auto r = classify(tuple, position, cross_check, bench);
    json j = {{"tuple", tuple},
              {"canonical", r.canonical},
              {"position", position},
              {"classification", std::string(to_string(r.combinatorial))}};
    if (cross_check) j["symplectic"] = r.symplectic ? json(std::string(to_string(*r.symplectic))) : json(nullptr);
    out << j.dump() << "\n";
    return kExitOk;
  } catch (const InvalidTuple& e) {
    err << "error: invalid tuple: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace trigonal::cli
