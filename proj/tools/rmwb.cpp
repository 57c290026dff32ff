#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "rmwb/rmwb.hpp"

using namespace rmwb;

namespace {

constexpr int kPass = 0, kFail = 1, kIoError = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Document load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

std::string witness(const std::vector<int>& map, const Poset& from, const Poset& to) {
  std::string s;
  for (int i = 0; i < static_cast<int>(map.size()); ++i) s += "  " + from.name(i) + " -> " + to.name(map[i]) + "\n";
  return s;
}

const Poset& order_of(const Document& d) {
  return std::visit([](const auto& v) -> const Poset& { return v.order; }, d);
}

Report validate_doc(const Document& d) {
  return std::visit([](const auto& v) { return validate(v); }, d);
}

void require_valid_doc(const Document& d) {
  auto r = validate_doc(d);
  if (const Check* c = r.first_failure())
    throw Error(ErrorKind::Invalid, "input fails " + c->law + (c->witness.empty() ? "" : " at " + c->witness));
}

struct Options {
  std::string functor;
  std::string out;
  bool generalized = false;
  bool bounded = false;
};

Document apply_functor(const Document& d, const Options& o) {
  const std::string& f = o.functor;
  if (const auto* A0 = std::get_if<Algebra>(&d)) {
    Algebra A = *A0;
    if (o.bounded && is_sugihara(A.profile)) A = with_bounds(A);
    if (f == "neg-cone") return is_sugihara(A.profile) ? bowtie_down(A) : negative_cone(A, A.name + "_neg");
    if (f == "twist-down") return bowtie_down(A);
    if (f == "twist-up") return bowtie_up(A);
    if (f == "sigma") return sigma_monoid(A);
    if (f == "esakia") return dual_space(o.generalized && A.profile == Profile::bGA ? without_bounds(A) : A);
    if (f == "dw") return dw_dual(A);
    if (f == "urquhart") return urquhart_dual(A);
  } else if (const auto* X = std::get_if<StructuredSpace>(&d)) {
    if (f == "esakia") return dual_algebra(*X);
    if (f == "dw") return plus_algebra(*X);
    if (f == "reflect") return reflect_space(*X);
  } else if (const auto* Y = std::get_if<RelevantSpace>(&d)) {
    if (f == "urquhart") return relevant_algebra(*Y);
    if (f == "project") return project_space(*Y);
  }
  throw Error(ErrorKind::ProfileMismatch, "functor " + f + " does not apply to this input");
}

// Runs one round trip and prints the witness. Returns true on success.
bool roundtrip(const Document& d, const std::string& which, std::ostream& os) {
  auto report = [&](bool ok, const std::string& what, const std::string& w) {
    os << (ok ? "PASS " : "FAIL ") << what << "\n";
    if (ok) os << w;
    return ok;
  };
  if (const auto* A = std::get_if<Algebra>(&d)) {
    if (which == "twist" && is_sugihara(A->profile)) {
      Algebra back = bowtie_up(bowtie_down(*A));
      auto iso = find_isomorphism(*A, back);
      return report(iso.has_value(), "twist: A ~ (A_neg)^bt", iso ? witness(iso->map, A->order, back.order) : "");
    }
    if (which == "twist" && is_brsa(A->profile)) {
      Algebra back = bowtie_down(bowtie_up(*A));
      auto iso = find_isomorphism(*A, back);
      return report(iso.has_value(), "twist: B ~ (B^bt)_neg", iso ? witness(iso->map, A->order, back.order) : "");
    }
    if (which == "esakia" && is_brsa(A->profile)) {
      auto s = sigma_iso(*A);
      Algebra back = dual_algebra(dual_space(*A));
      bool ok = validate_iso(*A, back, s.map).ok();
      return report(ok, "esakia: B ~ (B_*)^* via sigma", witness(s.map, A->order, back.order));
    }
    if (which == "dw" && is_sugihara(A->profile)) {
      auto e = eval_algebra(*A);
      Algebra back = plus_algebra(dw_dual(*A));
      bool ok = validate_iso(*A, back, e.map).ok();
      return report(ok, "dw: A ~ (A_+)^+ via evaluation", witness(e.map, A->order, back.order));
    }
    if (which == "urquhart" && A->profile == Profile::SugiharaBounded) {
      Algebra back = relevant_algebra(urquhart_dual(*A));
      auto iso = find_isomorphism(*A, back);
      return report(iso.has_value(), "urquhart: A ~ (A_u)^*", iso ? witness(iso->map, A->order, back.order) : "");
    }
  } else if (const auto* X = std::get_if<StructuredSpace>(&d)) {
    if (which == "esakia" && is_esakia_flavor(X->flavor) && !is_sugihara_space(X->flavor)) {
      auto m = counit_iso(*X);
      StructuredSpace back = dual_space(dual_algebra(*X));
      bool ok = validate_space_iso(*X, back, m).ok();
      return report(ok, "esakia: X ~ (X^*)_* via counit", witness(m, X->order, back.order));
    }
    if (which == "dw" && is_sugihara_space(X->flavor)) {
      auto m = eval_space(*X);
      StructuredSpace back = dw_dual(plus_algebra(*X));
      bool ok = validate_space_iso(*X, back, m).ok();
      return report(ok, "dw: X ~ (X^+)_+ via evaluation", witness(m, X->order, back.order));
    }
    if (which == "reflect" && X->flavor == Flavor::SugiharaUnpointed) {
      StructuredSpace back = project_space(reflect_space(*X));
      auto id = identity_map(X->size());
      bool ok = back.order == X->order && back.D == X->D;
      return report(ok, "reflect: (X^bt)_bt = X", witness(id, X->order, back.order));
    }
  } else if (const auto* Y = std::get_if<RelevantSpace>(&d)) {
    if (which == "reflect") {
      auto th = theta(*Y);
      RelevantSpace back = reflect_space(project_space(*Y));
      return report(th.report.ok(), "reflect: (Y_bt)^bt ~ Y via theta", witness(th.map, back.order, Y->order));
    }
  }
  throw Error(ErrorKind::ProfileMismatch, "round trip " + which + " does not apply to this input");
}

std::vector<std::string> default_roundtrips(const Document& d) {
  if (const auto* A = std::get_if<Algebra>(&d)) {
    if (is_brsa(A->profile)) return {"twist", "esakia"};
    if (A->profile == Profile::SugiharaBounded) return {"twist", "dw", "urquhart"};
    if (is_sugihara(A->profile)) return {"twist", "dw"};
  } else if (const auto* X = std::get_if<StructuredSpace>(&d)) {
    if (X->flavor == Flavor::SugiharaUnpointed) return {"dw", "reflect"};
    if (is_sugihara_space(X->flavor)) return {"dw"};
    if (is_esakia_flavor(X->flavor)) return {"esakia"};
  } else {
    return {"reflect"};
  }
  throw Error(ErrorKind::ProfileMismatch, "no round trip applies to this input");
}

std::optional<std::vector<int>> find_iso(const Document& a, const Document& b) {
  if (a.index() != b.index()) return std::nullopt;
  if (const auto* A = std::get_if<Algebra>(&a)) {
    auto m = find_isomorphism(*A, std::get<Algebra>(b));
    if (m) return m->map;
    return std::nullopt;
  }
  if (const auto* X = std::get_if<StructuredSpace>(&a)) return find_space_isomorphism(*X, std::get<StructuredSpace>(b));
  return find_relevant_isomorphism(std::get<RelevantSpace>(a), std::get<RelevantSpace>(b));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rmwb: finite Sugihara monoids, bRS-algebras, and their dual spaces"};
  app.require_subcommand(1);
  Options o;
  std::string path, path2, name;

  auto* validate_cmd = app.add_subcommand("validate", "Check every axiom of a structure file");
  validate_cmd->add_option("path", path)->required();

  auto* builtin_cmd = app.add_subcommand("builtin", "Write a builtin algebra");
  builtin_cmd->add_option("name", name, "S2..S8, E, E_bot, E_neg")->required();
  builtin_cmd->add_option("--out", o.out, "Output file (default stdout)");
  builtin_cmd->add_flag("--bounded", o.bounded, "Add bounds to the signature");

  auto* functor_cmd = app.add_subcommand("functor", "Apply a construction to a structure file");
  functor_cmd->add_option("path", path)->required();
  functor_cmd->add_option("--functor", o.functor,
                          "neg-cone, twist-up, twist-down, sigma, esakia, dw, urquhart, reflect, project")
      ->required();
  functor_cmd->add_option("--out", o.out, "Output file (default stdout)");
  functor_cmd->add_flag("--generalized", o.generalized, "Use generalized prime filters for a bGA");
  functor_cmd->add_flag("--bounded", o.bounded, "Treat a Sugihara monoid as bounded");

  auto* rt_cmd = app.add_subcommand("roundtrip", "Run double-dual round trips and print witnesses");
  rt_cmd->add_option("path", path)->required();
  rt_cmd->add_option("--functor", o.functor, "twist, esakia, dw, urquhart, reflect (default: all applicable)");

  auto* iso_cmd = app.add_subcommand("iso", "Search for an isomorphism between two files");
  iso_cmd->add_option("path1", path)->required();
  iso_cmd->add_option("path2", path2)->required();

  auto* render_cmd = app.add_subcommand("render", "Write a DOT Hasse diagram");
  render_cmd->add_option("path", path)->required();
  render_cmd->add_option("--out", o.out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate_cmd) {
      Document d = load(path);
      auto r = validate_doc(d);
      std::cout << r.str() << (r.ok() ? "PASS\n" : "FAIL\n");
      return r.ok() ? kPass : kFail;
    }
    if (*builtin_cmd) {
      Algebra A = builtin(name);
      if (o.bounded && is_sugihara(A.profile)) A = with_bounds(A);
      write_out(o.out, emit(A));
      return kPass;
    }
    if (*functor_cmd) {
      Document d = load(path);
      require_valid_doc(d);
      write_out(o.out, emit(apply_functor(d, o)));
      return kPass;
    }
    if (*rt_cmd) {
      Document d = load(path);
      require_valid_doc(d);
      auto which = o.functor.empty() ? default_roundtrips(d) : std::vector<std::string>{o.functor};
      bool ok = true;
      for (const auto& w : which) ok = roundtrip(d, w, std::cout) && ok;
      return ok ? kPass : kFail;
    }
    if (*iso_cmd) {
      Document a = load(path), b = load(path2);
      require_valid_doc(a);
      require_valid_doc(b);
      auto m = find_iso(a, b);
      if (!m) {
        std::cout << "not isomorphic\n";
        return kFail;
      }
      std::cout << "isomorphic\n" << witness(*m, order_of(a), order_of(b));
      return kPass;
    }
    if (*render_cmd) {
      Document d = load(path);
      write_out(o.out, render_dot(d));
      return kPass;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse ? kIoError : kFail;
  }
  return kPass;
}
