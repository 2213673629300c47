#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "nps/cyclotomy.hpp"
#include "nps/multiplier.hpp"
#include "nps/report.hpp"
#include "nps/search.hpp"
#include "nps/text_format.hpp"

namespace nps::cli {
namespace {

struct Globals {
  bool pretty = false;
  bool json = false;
  unsigned jobs = 0;
};

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream os;
  if (path == "-") {
    os << in.rdbuf();
    return os.str();
  }
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open '" + path + "'");
  os << file.rdbuf();
  return os.str();
}

// A file path, "-" for stdin, or inline tokens such as "z,1,2".
AlmostSequence load_sequence(const std::string& arg, std::optional<int> m, std::istream& in) {
  if (arg == "-" || std::filesystem::is_regular_file(arg)) return parse_sequence_text(read_all(arg, in), m);
  if (!m) throw std::invalid_argument("inline sequence needs --m");
  return AlmostSequence::parse(arg, *m);
}

DiffSet load_set(const std::string& arg, std::istream& in) { return parse_diffset_text(read_all(arg, in)); }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string value_text(const CycInt& v, bool pretty) {
  if (pretty) return v.to_string();
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.coeffs().size(); ++i) os << (i ? "," : "") << v.coeffs()[i];
  os << ']';
  return os.str();
}

int cmd_autocorr(const Globals& g, const AlmostSequence& seq, std::ostream& out) {
  if (g.json) {
    emit(out, spectrum_report(seq, g.pretty));
    return kOk;
  }
  const auto spec = spectrum(seq);
  out << "t\tvalue\tinteger\n";
  for (std::size_t t = 1; t <= spec.size(); ++t) {
    const auto& v = spec[t - 1];
    const auto i = v.as_integer();
    out << t << '\t' << value_text(v, g.pretty) << '\t' << (i ? std::to_string(*i) : "-") << '\n';
  }
  return kOk;
}

void comment_lines(std::ostream& out, const std::vector<std::string>& lines) {
  for (const auto& l : lines) out << "# " << l << '\n';
}

int emit_construction(const Globals& g, const ConstructionCheck& c, const std::string& what, std::ostream& out) {
  if (g.json) {
    Json j{{"construction", what},
           {"sequence", c.sequence.to_string()},
           {"expected", c.expected},
           {"matches", c.matches},
           {"report", spectrum_report(c.sequence, g.pretty)}};
    emit(out, j);
  } else {
    comment_lines(out, {what, "expected: " + c.expected, "classified: " + c.classification.type_string(),
                        std::string("matches: ") + (c.matches ? "yes" : "no")});
    write_sequence(out, c.sequence);
  }
  return c.matches ? kOk : kVerificationFailed;
}

Permutation sigma_from(const std::vector<int>& cd, int m) {
  if (cd.empty()) return Permutation::identity(m);
  if (cd.size() != 2) throw std::invalid_argument("--sigma expects c,d");
  return Permutation::affine(m, cd[0], cd[1]);
}

std::optional<Int> opt_alpha(const CLI::Option* opt, Int value) {
  return opt->count() ? std::optional<Int>(value) : std::nullopt;
}

int verdict_exit(bool ok) { return ok ? kOk : kVerificationFailed; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Almost m-ary nearly perfect sequences and partial direct product difference sets", "npstool"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--pretty", g.pretty, "Render cyclotomic integers as zeta-polynomials");
  app.add_flag("--json", g.json, "Emit JSON instead of text where both exist");
  app.add_option("--jobs", g.jobs, "Worker threads for search and probe (default: NPS_JOBS or all cores)");

  // autocorr / classify
  std::string seq_arg;
  int seq_m = 0;
  auto* autocorr = app.add_subcommand("autocorr", "Out-of-phase autocorrelation spectrum");
  autocorr->add_option("--seq", seq_arg, "Sequence file, '-' for stdin, or inline tokens")->required();
  auto* autocorr_m = autocorr->add_option("--m", seq_m, "Alphabet size when the input has no header");
  auto* classify_cmd = app.add_subcommand("classify", "Classify a sequence (JSON)");
  classify_cmd->add_option("--seq", seq_arg, "Sequence file, '-' for stdin, or inline tokens")->required();
  auto* classify_m = classify_cmd->add_option("--m", seq_m, "Alphabet size when the input has no header");

  // construct
  auto* construct = app.add_subcommand("construct", "Build sequences and sets from the known constructions");
  construct->require_subcommand(1);
  int p5_n = 0, p5_a = 0, p5_b = 0;
  auto* prop5 = construct->add_subcommand("prop5", "Set {a} x (Z_n \\ {b}) u (Z_n \\ {b}) x {b} in Z_n x Z_n");
  prop5->add_option("--n", p5_n)->required()->check(CLI::Range(2, 100000));
  prop5->add_option("--a", p5_a)->required();
  prop5->add_option("--b", p5_b)->required();

  Int cq = 0, alpha = 0;
  int cm = 0, root_order = 0;
  std::vector<int> sigma_cd, grouping;
  bool binary = false;
  auto* sigma = construct->add_subcommand("sigma", "sigma-sequence over the cyclotomic classes of Z_q");
  sigma->add_option("--q", cq, "Prime, or twice an odd prime")->required();
  sigma->add_option("--m", cm)->required();
  auto* sigma_alpha = sigma->add_option("--alpha", alpha, "Generator of the unit group");
  sigma->add_option("--sigma", sigma_cd, "Affine permutation x -> c*x + d")->delimiter(',')->expected(2);
  auto* quaternary = construct->add_subcommand("quaternary", "Almost quaternary sequence from the 4th classes");
  quaternary->add_option("--q", cq, "Prime = 1 mod 4")->required();
  auto* quaternary_alpha = quaternary->add_option("--alpha", alpha);
  quaternary->add_flag("--binary", binary, "Emit the binary projection instead");
  auto* family = construct->add_subcommand("family2m", "The 2m sequences sharing the spectrum of a prime-alphabet NPS");
  family->add_option("--seq", seq_arg)->required();
  auto* family_m = family->add_option("--m", seq_m);
  auto* combine = construct->add_subcommand("combine", "Group cyclotomic classes onto powers of a root of unity");
  combine->add_option("--q", cq)->required();
  combine->add_option("--m", cm, "Number of classes")->required();
  combine->add_option("--grouping", grouping, "Exponent per class")->delimiter(',')->required();
  combine->add_option("--root-order", root_order)->required();
  auto* combine_alpha = combine->add_option("--alpha", alpha);

  // verify
  auto* verify = app.add_subcommand("verify", "Check parameters and identities");
  verify->require_subcommand(1);
  std::string set_arg, params_arg;
  int ell = 0;
  auto* v_pdpds = verify->add_subcommand("pdpds", "Check that a set is an ell-PDPDS");
  v_pdpds->add_option("--set", set_arg)->required();
  v_pdpds->add_option("--ell", ell)->required();
  auto* v_pdpds_params = v_pdpds->add_option("--params", params_arg, "Expected parameters, ell-(n,m,k,l1,l2,l3,u1,u2)");
  auto* v_ident = verify->add_subcommand("identities", "Column-sum identities of an ell-PDPDS");
  v_ident->add_option("--set", set_arg)->required();
  auto* v_ident_ell = v_ident->add_option("--ell", ell);
  auto* v_ident_params = v_ident->add_option("--params", params_arg);
  auto* v_dickson = verify->add_subcommand("dickson", "Cyclotomic-number relations and class sums");
  v_dickson->add_option("--q", cq)->required();
  v_dickson->add_option("--m", cm)->required();
  auto* v_dickson_alpha = v_dickson->add_option("--alpha", alpha);
  auto* v_sumdk = verify->add_subcommand("sumdk", "Class sums vanish modulo q");
  v_sumdk->add_option("--q", cq)->required();
  v_sumdk->add_option("--m", cm)->required();
  auto* v_sumdk_alpha = v_sumdk->add_option("--alpha", alpha);
  auto* v_group = verify->add_subcommand("groupring", "Compare R R^(-1) with the group-ring form of the parameters");
  v_group->add_option("--set", set_arg)->required();
  v_group->add_option("--params", params_arg)->required();

  // multipliers / orbits
  auto* mult = app.add_subcommand("multipliers", "Multipliers t with t*R = R + g");
  mult->add_option("--set", set_arg)->required();
  int on = 0, om = 0;
  Int ot = 1;
  std::size_t union_k = 0;
  std::vector<int> zeros;
  auto* orbits_cmd = app.add_subcommand("orbits", "Orbits of x -> t*x, optionally searching orbit unions");
  orbits_cmd->add_option("--n", on)->required();
  orbits_cmd->add_option("--m", om)->required();
  orbits_cmd->add_option("--t", ot)->required();
  auto* orbits_k = orbits_cmd->add_option("--union-size", union_k, "Search unions of this size");
  orbits_cmd->add_option("--zeros", zeros, "h-coordinates the union avoids")->delimiter(',');
  auto* orbits_ell = orbits_cmd->add_option("--ell", ell, "Verify unions with this ell (default: any)");

  // search / probe
  std::string spec_arg;
  bool table = false;
  auto* search = app.add_subcommand("search", "Exhaustive search from a JSON spec");
  search->add_option("--spec", spec_arg, "Spec file or '-'")->required();
  search->add_flag("--table", table, "Print a table instead of JSON");
  int probe_m = 0, max_period = 0, min_period = 3;
  std::uint64_t probe_budget = 1'000'000'000;
  auto* probe = app.add_subcommand("probe", "Non-trivial consecutive-zero NPS search over a range of periods");
  probe->add_option("--m", probe_m)->required();
  probe->add_option("--max-period", max_period)->required();
  probe->add_option("--min-period", min_period);
  probe->add_option("--node-budget", probe_budget);
  probe->add_flag("--table", table, "Print a table instead of JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*autocorr) {
      return cmd_autocorr(g, load_sequence(seq_arg, autocorr_m->count() ? std::optional<int>(seq_m) : std::nullopt, in), out);
    }
    if (*classify_cmd) {
      emit(out, spectrum_report(load_sequence(seq_arg, classify_m->count() ? std::optional<int>(seq_m) : std::nullopt, in), g.pretty));
      return kOk;
    }

    if (*construct) {
      if (*prop5) {
        auto inst = construct_prop5(p5_n, p5_a, p5_b);
        const bool ok = is_lpdpds(inst.set, inst.expected);
        const auto verdict = verify_lpdpds(inst.set, inst.expected.ell);
        if (g.json) {
          Json j{{"set", to_json(inst.set)},
                 {"expected", to_json(inst.expected)},
                 {"dpds", inst.is_dpds},
                 {"verified", ok},
                 {"report", pdpds_report(inst.set, inst.expected.ell, verdict)}};
          emit(out, j);
        } else {
          std::vector<std::string> lines{"prop5 n=" + std::to_string(p5_n) + " a=" + std::to_string(p5_a) +
                                             " b=" + std::to_string(p5_b),
                                         "expected: " + inst.expected.to_string() +
                                             (inst.is_dpds ? " (DPDS)" : ""),
                                         std::string("verified: ") + (ok ? "yes" : "no")};
          if (const auto* p = std::get_if<PdpdsParams>(&verdict)) {
            lines.push_back("measured: " + p->to_string());
          } else {
            lines.push_back("measured: " + std::get<BucketFailure>(verdict).to_string());
          }
          comment_lines(out, lines);
          write_diffset(out, inst.set);
        }
        return verdict_exit(ok);
      }
      if (*sigma) {
        const auto a = opt_alpha(sigma_alpha, alpha);
        const auto perm = sigma_from(sigma_cd, cm);
        if (is_prime(cq)) return emit_construction(g, verify_type_minus1(cq, cm, perm, a), "sigma q=" + std::to_string(cq) + " m=" + std::to_string(cm), out);
        if (cq % 2 == 0) return emit_construction(g, construct_2p(cq / 2, cm, perm, a), "sigma q=" + std::to_string(cq) + " m=" + std::to_string(cm), out);
        throw std::invalid_argument("--q must be prime or twice an odd prime");
      }
      if (*quaternary) {
        auto c = construct_quaternary(cq, opt_alpha(quaternary_alpha, alpha));
        if (!binary) return emit_construction(g, c, "quaternary q=" + std::to_string(cq), out);
        ConstructionCheck b{binary_projection(c.sequence), {}, false, "uniform(-1)"};
        b.classification = classify(b.sequence);
        b.matches = b.classification.kind == NpsClassification::Kind::UniformNps && b.classification.gamma1 == -1;
        return emit_construction(g, b, "binary projection of quaternary q=" + std::to_string(cq), out);
      }
      if (*family) {
        const auto seq = load_sequence(seq_arg, family_m->count() ? std::optional<int>(seq_m) : std::nullopt, in);
        const auto members = family_2m(seq);
        if (g.json) {
          Json arr = Json::array();
          for (const auto& s : members) arr.push_back(spectrum_report(s, g.pretty));
          emit(out, arr);
        } else {
          for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) out << '\n';
            comment_lines(out, {"member " + std::to_string(i), "type: " + classify(members[i]).type_string()});
            write_sequence(out, members[i]);
          }
        }
        return kOk;
      }
      if (*combine) {
        const auto seq = combine_classes(cq, cm, grouping, root_order, opt_alpha(combine_alpha, alpha));
        if (g.json) {
          emit(out, spectrum_report(seq, g.pretty));
        } else {
          const auto c = classify(seq);
          std::vector<std::string> lines{"combine q=" + std::to_string(cq) + " m=" + std::to_string(cm),
                                         "classified: " + c.type_string()};
          for (const auto& v : c.distinct_values) lines.push_back("value: " + v.to_string());
          comment_lines(out, lines);
          write_sequence(out, seq);
        }
        return kOk;
      }
    }

    if (*verify) {
      if (*v_pdpds) {
        const auto r = load_set(set_arg, in);
        const auto verdict = verify_lpdpds(r, ell);
        Json j = pdpds_report(r, ell, verdict);
        bool ok = std::holds_alternative<PdpdsParams>(verdict);
        if (v_pdpds_params->count()) {
          const auto want = PdpdsParams::parse(params_arg);
          const bool same = is_lpdpds(r, want);
          j["expected"] = to_json(want);
          j["matches_expected"] = same;
          ok = ok && same;
        }
        j["ok"] = ok;
        emit(out, j);
        return verdict_exit(ok);
      }
      if (*v_ident) {
        const auto r = load_set(set_arg, in);
        PdpdsParams params;
        if (v_ident_params->count()) {
          params = PdpdsParams::parse(params_arg);
        } else {
          if (!v_ident_ell->count()) throw std::invalid_argument("identities needs --ell or --params");
          const auto verdict = verify_lpdpds(r, ell);
          if (const auto* f = std::get_if<BucketFailure>(&verdict)) {
            emit(out, Json{{"ok", false}, {"failure", to_json(*f)}});
            return kVerificationFailed;
          }
          params = std::get<PdpdsParams>(verdict);
        }
        const auto rep = verify_si_identities(r, params);
        Json j = to_json(rep);
        j["params"] = to_json(params);
        emit(out, j);
        return verdict_exit(rep.ok);
      }
      if (*v_dickson || *v_sumdk) {
        const auto a = opt_alpha(*v_dickson ? v_dickson_alpha : v_sumdk_alpha, alpha);
        const auto classes = build_classes(cq, cm, a);
        Json j{{"q", cq}, {"m", cm}, {"f", classes.f()}, {"alpha", classes.alpha()}};
        bool ok = true;
        if (*v_dickson) {
          if (is_prime(cq)) {
            const auto d = verify_dickson(classes);
            j["dickson"] = to_json(d);
            ok = ok && d.ok;
          } else {
            j["dickson"] = "not applicable: q is not prime";
          }
        }
        const auto s = verify_sum_dk(classes);
        j["sum_dk"] = to_json(s);
        ok = ok && s.ok;
        j["ok"] = ok;
        emit(out, j);
        return verdict_exit(ok);
      }
      if (*v_group) {
        const auto r = load_set(set_arg, in);
        const auto params = PdpdsParams::parse(params_arg);
        const bool ok = verify_group_ring_identity(r, params);
        emit(out, Json{{"ok", ok}, {"params", to_json(params)}});
        return verdict_exit(ok);
      }
    }

    if (*mult) {
      const auto r = load_set(set_arg, in);
      Json arr = Json::array();
      for (const auto& x : find_multipliers(r)) {
        Json j = to_json(x);
        j["trivial_action"] = acts_trivially(r.n(), r.m(), x.t);
        arr.push_back(std::move(j));
      }
      emit(out, arr);
      return kOk;
    }

    if (*orbits_cmd) {
      Json j{{"n", on}, {"m", om}, {"t", ot}};
      Json arr = Json::array();
      for (const auto& o : orbits(on, om, ot)) arr.push_back(to_json(o));
      j["orbits"] = std::move(arr);
      if (orbits_k->count()) {
        OrbitSearchConstraints c;
        c.k = union_k;
        c.zero_positions = zeros;
        if (orbits_ell->count()) c.ell = ell;
        Json found = Json::array();
        for (const auto& col : orbit_union_search(on, om, ot, c)) found.push_back(to_json(col));
        j["collections"] = std::move(found);
      }
      emit(out, j);
      return kOk;
    }

    if (*search) {
      SearchSpec spec = search_spec_from_json(Json::parse(read_all(spec_arg, in)));
      if (g.jobs) spec.jobs = g.jobs;
      const auto report = exhaustive_search(spec);
      if (!table) {
        emit(out, to_json(report));
        return kOk;
      }
      out << "sequence\ttype\n";
      for (const auto& s : report.found) out << s.to_string() << '\t' << classify(s).type_string() << '\n';
      out << "# found " << report.found.size() << ", nodes " << report.nodes << ", leaves " << report.leaves
          << ", pruned " << report.pruned_correlation << "/" << report.pruned_symmetry << ", exhaustive "
          << (report.exhaustive ? "yes" : "no") << '\n';
      return kOk;
    }

    if (*probe) {
      if (min_period < 3 || max_period < min_period) throw std::invalid_argument("probe: need 3 <= min-period <= max-period");
      Json rows = Json::array();
      if (table) out << "period\tfound\tnodes\texhaustive\n";
      for (int n = min_period; n <= max_period; ++n) {
        SearchSpec spec;
        spec.m = probe_m;
        spec.period = n;
        spec.zero_mode = SearchSpec::ZeroMode::Consecutive;
        spec.nontrivial_only = true;
        spec.dedup_rotation = spec.dedup_scalar = spec.dedup_reversal = true;
        spec.node_budget = probe_budget;
        spec.jobs = g.jobs;
        const auto report = exhaustive_search(spec);
        if (table) {
          out << n << '\t' << report.found.size() << '\t' << report.nodes << '\t' << (report.exhaustive ? "yes" : "no")
              << '\n';
        }
        Json found = Json::array();
        for (const auto& s : report.found) found.push_back(s.to_string());
        rows.push_back(Json{{"period", n}, {"found", std::move(found)}, {"nodes", report.nodes},
                            {"exhaustive", report.exhaustive}});
      }
      if (!table) emit(out, Json{{"m", probe_m}, {"periods", std::move(rows)}});
      return kOk;
    }
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace nps::cli
