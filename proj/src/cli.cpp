#include "cofree/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "cofree/config.hpp"
#include "cofree/cotensor.hpp"
#include "cofree/presets.hpp"
#include "cofree/rotabaxter.hpp"

namespace cofree {

namespace {

using nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Options {
  std::string config_path;
  int max_degree = 3;
  bool emit = false;
  std::string format = "text";
};

class Reporter {
 public:
  Reporter(const Options& opts, std::ostream& out) : json_(opts.format == "json"), out_(out) {}

  template <class Key, class KeyText>
  int result(const std::string& command, const LinComb<Key>& value, const std::string& rendered, KeyText key_text) {
    if (!json_) {
      out_ << rendered << "\n";
      return kExitOk;
    }
    json terms = json::array();
    for (const auto& [k, c] : value) terms.push_back({{"coefficient", c.to_string()}, {"basis", key_text(k)}});
    out_ << json{{"command", command}, {"result", rendered}, {"terms", terms}}.dump(2) << "\n";
    return kExitOk;
  }

  int check(const std::string& name, const CheckResult& r) {
    if (json_) {
      json j{{"check", name}, {"passed", r.passed}};
      if (!r.passed) {
        j["witness"] = r.witness;
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
      }
      out_ << j.dump(2) << "\n";
    } else {
      out_ << name << ": " << r.describe() << "\n";
    }
    return r.passed ? kExitOk : kExitCheckFailed;
  }

  int text(const std::string& command, const std::string& body) {
    if (json_) out_ << json{{"command", command}, {"output", body}}.dump(2) << "\n";
    else out_ << body;
    return kExitOk;
  }

 private:
  bool json_;
  std::ostream& out_;
};

std::string word_text(const Word& w, const Alphabet* al) { return w.empty() ? std::string("1") : render_word(w, al); }

ExpressionSyntax parse_argument(const std::string& text, int index) {
  try {
    return parse_expression(text, 1);
  } catch (const ParseError& e) {
    throw InputError("argument " + std::to_string(index) + ", column " + std::to_string(e.column()) + ": " + e.message());
  }
}

template <class F>
auto convert_argument(int index, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw InputError("argument " + std::to_string(index) + ", column " + std::to_string(e.column()) + ": " + e.message());
  }
}

bool has_groups(const ExpressionSyntax& e) {
  for (const auto& t : e.terms) {
    if (t.group_only) return true;
    for (const auto& l : t.word)
      if (l.group) return true;
  }
  return false;
}

bool has_smash(const ExpressionSyntax& e) {
  for (const auto& t : e.terms)
    if (t.smash_group) return true;
  return false;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in cofree Hopf algebras over abelian group algebras", "cofree"};
  Options opts;
  app.add_option("--config", opts.config_path, "Configuration file");
  app.add_option("--max-degree", opts.max_degree, "Total degree cap for sampled checks")->check(CLI::Range(0, 12));
  app.add_flag("--emit-config", opts.emit, "Print the configuration in canonical form");
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string check_name;
  auto* check = app.add_subcommand("check", "Verify axioms: yb, alg, yd, bialg, rb");
  check->add_option("what", check_name)->required()->check(CLI::IsMember({"yb", "alg", "yd", "bialg", "rb"}));

  std::string x_text, y_text;
  auto binary = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("X", x_text)->required();
    sub->add_option("Y", y_text)->required();
    return sub;
  };
  auto unary = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("X", x_text)->required();
    return sub;
  };
  auto* qsh_cmd = binary("qsh", "Quantum quasi-shuffle product on T(V)");
  auto* star_cmd = binary("star", "Product of the cofree Hopf algebra");
  auto* smash_cmd = binary("smash-star", "Product of the smash product T(V)#H");
  auto* comul_cmd = unary("comul", "Coproduct of the cofree Hopf algebra");
  auto* rb_cmd = unary("rb-apply", "Rota-Baxter operator (a unit letter is adjoined when missing)");
  auto* phi_cmd = unary("phi", "Right coinvariants to T(V)");
  auto* psi_cmd = unary("psi", "T(V) to right coinvariants");

  int preset_n = 0;
  std::string cartan_path;
  auto* preset = app.add_subcommand("preset", "Emit a preset configuration");
  preset->require_subcommand(1);
  auto* clifford = preset->add_subcommand("clifford", "Universal Clifford algebra");
  clifford->add_option("--n", preset_n, "Number of generators v_i")->required()->check(CLI::Range(1, 64));
  auto* uqg = preset->add_subcommand("uqg", "Universal quantum group");
  uqg->add_option("--cartan", cartan_path, "File with an integral Cartan matrix")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Reporter report(opts, out);
  try {
    if (preset->parsed()) {
      if (clifford->parsed()) return report.text("preset", emit_config(build_clifford(preset_n)));
      const CartanMatrix c = parse_cartan(read_file(cartan_path));
      return report.text("preset", emit_config(build_uqg(c)));
    }

    if (opts.config_path.empty()) throw InputError("--config is required");
    ConfigDocument doc;
    try {
      doc = parse_config(read_file(opts.config_path));
    } catch (const ParseError& e) {
      throw InputError(opts.config_path + ":" + e.what());
    }
    for (const auto& note : doc.notes) err << "note: " << note << "\n";
    if (opts.emit) report.text("emit-config", emit_config(doc));
    if (app.get_subcommands().empty()) {
      if (opts.emit) return kExitOk;
      throw InputError("no command given");
    }

    const auto& al = doc.spec.alphabet();
    const auto cap = static_cast<std::size_t>(opts.max_degree);
    auto require_yd = [&doc]() {
      if (auto r = check_yd(doc.spec); !r) throw InputError("configuration fails the Yetter-Drinfeld check: " + r.describe());
    };
    auto cotensor_text = [](const HopfBimodule& m) {
      return [al = m.alphabet()](const CBasis& b) { return render_basis(b, al.get()); };
    };

    if (check->parsed()) {
      if (check_name == "yb") return report.check("yb", check_yang_baxter(doc.braiding_table()));
      if (check_name == "alg") return report.check("alg", check_braided_algebra(doc.algebra()));
      if (check_name == "yd") {
        CheckResult r = check_yd(doc.spec);
        if (r && doc.spec.mult()) r = check_yd_algebra(doc.spec);
        return report.check("yd", r);
      }
      if (check_name == "bialg") {
        CheckResult r = check_qsh_associativity(doc.algebra(), cap);
        if (r) r = check_qsh_bialgebra(doc.algebra(), cap);
        return report.check("bialg", r);
      }
      // rb
      const BraidedAlgebraSpec base = doc.algebra();
      const BraidedAlgebraSpec spec = base.unit() ? base : adjoin_unit(base);
      const auto inst = qsh_instance(spec);
      const auto words = all_words(spec.dim(), 0, cap);
      for (const auto& x : words)
        for (const auto& y : words) {
          if (x.size() + y.size() > cap) continue;
          const auto r = rb_check(inst, Element(x, 1, spec.alphabet()), Element(y, 1, spec.alphabet()));
          if (!r) return report.check("rb", r);
        }
      return report.check("rb", CheckResult::pass());
    }

    if (qsh_cmd->parsed()) {
      const BraidedAlgebraSpec spec = doc.algebra();
      const Element x = convert_argument(1, [&] { return to_element(parse_argument(x_text, 1), al); });
      const Element y = convert_argument(2, [&] { return to_element(parse_argument(y_text, 2), al); });
      const Element r = qsh(spec, x, y);
      return report.result("qsh", r, render(r), [&al](const Word& w) { return word_text(w, al.get()); });
    }

    if (rb_cmd->parsed()) {
      const ExpressionSyntax e = parse_argument(x_text, 1);
      if (has_smash(e) || has_groups(e)) {
        require_yd();
        const HopfBimodule m(doc.spec.unit() ? doc.spec : adjoin_unit(doc.spec));
        if (has_smash(e)) {
          const SmashElement x = convert_argument(1, [&] { return to_smash_element(e, m, 1); });
          const SmashElement r = P_tilde(m, x);
          const auto mal = m.alphabet();
          return report.result("rb-apply", r, render(r),
                               [mal](const SmashKey& k) { return render_word(k.first, mal.get()) + "#" + render_group(k.second); });
        }
        const CotensorElement x = convert_argument(1, [&] { return to_cotensor(e, m, 1); });
        const CotensorElement r = P_tilde(m, x);
        return report.result("rb-apply", r, render(r), cotensor_text(m));
      }
      const BraidedAlgebraSpec base = doc.algebra();
      const BraidedAlgebraSpec spec = base.unit() ? base : adjoin_unit(base);
      const Element x = convert_argument(1, [&] { return to_element(e, spec.alphabet()); });
      const Element r = P_qsh(spec, x);
      const auto sal = spec.alphabet();
      return report.result("rb-apply", r, render(r), [sal](const Word& w) { return word_text(w, sal.get()); });
    }

    require_yd();
    const HopfBimodule m(doc.spec);
    if (star_cmd->parsed()) {
      const CotensorElement x = convert_argument(1, [&] { return to_cotensor(parse_argument(x_text, 1), m); });
      const CotensorElement y = convert_argument(2, [&] { return to_cotensor(parse_argument(y_text, 2), m); });
      for (const auto* v : {&x, &y})
        if (auto r = cotensor_check(m, *v); !r) throw InputError("input is not a cotensor element: " + r.describe());
      const CotensorElement r = star(m, x, y);
      return report.result("star", r, render(r), cotensor_text(m));
    }
    if (comul_cmd->parsed()) {
      const CotensorElement x = convert_argument(1, [&] { return to_cotensor(parse_argument(x_text, 1), m); });
      if (auto r = cotensor_check(m, x); !r) throw InputError("input is not a cotensor element: " + r.describe());
      const CPairElement r = coproduct(m, x);
      const auto mal = m.alphabet();
      return report.result("comul", r, render(r), [mal](const CPair& p) {
        return render_basis(p.first, mal.get()) + " | " + render_basis(p.second, mal.get());
      });
    }
    if (smash_cmd->parsed()) {
      const SmashElement x = convert_argument(1, [&] { return to_smash_element(parse_argument(x_text, 1), m, 1); });
      const SmashElement y = convert_argument(2, [&] { return to_smash_element(parse_argument(y_text, 2), m, 2); });
      const SmashElement r = star_smash(m, x, y);
      const auto mal = m.alphabet();
      return report.result("smash-star", r, render(r),
                           [mal](const SmashKey& k) { return render_word(k.first, mal.get()) + "#" + render_group(k.second); });
    }
    if (phi_cmd->parsed()) {
      const CotensorElement x = convert_argument(1, [&] { return to_cotensor(parse_argument(x_text, 1), m); });
      const Element r = phi(m, x);
      return report.result("phi", r, render(r), [&al](const Word& w) { return word_text(w, al.get()); });
    }
    if (psi_cmd->parsed()) {
      const Element x = convert_argument(1, [&] { return to_element(parse_argument(x_text, 1), al); });
      const CotensorElement r = psi(m, x);
      return report.result("psi", r, render(r), cotensor_text(m));
    }
    throw InputError("no command given");
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace cofree
