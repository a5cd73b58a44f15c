#include "ubp/cli.hpp"

#include "ubp/bases.hpp"
#include "ubp/error.hpp"
#include "ubp/hopf.hpp"
#include "ubp/json_format.hpp"
#include "ubp/monoid.hpp"
#include "ubp/ncsym.hpp"
#include "ubp/schur_weyl.hpp"
#include "ubp/shuffles.hpp"
#include "ubp/text_format.hpp"
#include "ubp/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace ubp::cli {

  namespace {

    using nlohmann::json;

    constexpr int kSeriesCeiling = 12;

    struct Options {
      std::string format  = "text";
      int         ceiling = kDefaultEnumerationCeiling;
      unsigned    jobs    = 1;

      bool json() const {
        return format == "json";
      }
    };

    // Raised for well-formed requests that a command refuses to carry out.
    struct UsageError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    void require_within(int n, Options const& opt, char const* what) {
      if (n > opt.ceiling) {
        throw UsageError(std::string(what) + " " + std::to_string(n) + " exceeds the enumeration ceiling " +
                         std::to_string(opt.ceiling) + " (raise it with --ceiling or " + kCeilingEnv + ")");
      }
    }

    bool looks_like_tensor(std::string const& text) {
      return text.find('|') != std::string::npos;
    }

    // ---- count -------------------------------------------------------------

    int cmd_count(int n, Options const& opt, std::ostream& out, std::ostream& err) {
      auto const                formula   = count_ubp(n);
      auto const                recursion = count_ubp_recursive(n);
      std::optional<Integer> enumerated;
      if (n <= opt.ceiling) {
        enumerated = static_cast<unsigned long>(enumerate_ubp(n, opt.ceiling).size());
      }
      bool const agree = formula == recursion && (!enumerated || *enumerated == formula);
      if (opt.json()) {
        json j{{"n", n}, {"formula", integer_to_json(formula)}, {"recursion", integer_to_json(recursion)}};
        j["enumeration"] = enumerated ? integer_to_json(*enumerated) : json(nullptr);
        j["agree"]       = agree;
        out << j.dump() << '\n';
      } else {
        out << "u_" << n << " = " << formula << '\n';
        out << "formula: " << formula << '\n';
        out << "recursion: " << recursion << '\n';
        if (enumerated) {
          out << "enumeration: " << *enumerated << '\n';
        } else {
          out << "enumeration: skipped (n exceeds the enumeration ceiling " << opt.ceiling << ")\n";
        }
      }
      if (!agree) {
        err << "error: counting methods disagree for n = " << n << '\n';
        return kExitCheckFailed;
      }
      return kExitSuccess;
    }

    // ---- op ----------------------------------------------------------------

    void emit(Element const& x, Options const& opt, std::ostream& out) {
      out << (opt.json() ? to_json(x).dump() : to_text(x)) << '\n';
    }

    void emit(TensorElement const& t, Options const& opt, std::ostream& out) {
      out << (opt.json() ? to_json(t).dump() : to_text(t)) << '\n';
    }

    void emit(Integer const& x, Options const& opt, std::ostream& out) {
      out << (opt.json() ? integer_to_json(x).dump() : to_string(x)) << '\n';
    }

    // A bare diagram is accepted as input and read with coefficient 1.
    bool is_bare(std::string const& text) {
      return text.find('*') == std::string::npos && text.find("->") != std::string::npos;
    }

    Element parse_input(std::string const& text) {
      return is_bare(text) ? Element::basis(parse_ubp(text)) : parse_element(text);
    }

    TensorElement parse_tensor_input(std::string const& text) {
      if (!is_bare(text)) {
        return parse_tensor(text);
      }
      auto const bar = text.find('|');
      if (bar == std::string::npos) {
        throw ParseError("expected ' | ' between tensor factors", text.size());
      }
      auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(' '));
        s.erase(s.find_last_not_of(' ') + 1);
        return s;
      };
      return tensor(Element::basis(parse_ubp(trim(text.substr(0, bar)))),
                    Element::basis(parse_ubp(trim(text.substr(bar + 1)))));
    }

    Element parse_within(std::string const& text, Options const& opt) {
      auto x = parse_input(text);
      for (auto const& [f, c] : x) {
        require_within(f.size(), opt, "degree");
      }
      return x;
    }

    int cmd_op(std::string const& name, std::vector<std::string> const& inputs, Options const& opt, std::ostream& out) {
      auto arity = [&](std::size_t lo, std::size_t hi) {
        if (inputs.size() < lo || inputs.size() > hi) {
          throw UsageError("op " + name + " takes " +
                           (lo == hi ? std::to_string(lo) : std::to_string(lo) + " or more") + " argument(s)");
        }
      };
      if (name == "product") {
        arity(1, static_cast<std::size_t>(-1));
        Element result = unit_element();
        for (auto const& text : inputs) {
          result = product(result, parse_within(text, opt));
        }
        emit(result, opt, out);
      } else if (name == "coproduct") {
        arity(1, 1);
        emit(coproduct(parse_within(inputs[0], opt)), opt, out);
      } else if (name == "antipode") {
        arity(1, 1);
        emit(antipode(parse_within(inputs[0], opt)), opt, out);
      } else if (name == "counit") {
        arity(1, 1);
        emit(counit(parse_within(inputs[0], opt)), opt, out);
      } else if (name == "pair") {
        arity(2, 2);
        if (looks_like_tensor(inputs[0]) || looks_like_tensor(inputs[1])) {
          emit(pairing(parse_tensor_input(inputs[0]), parse_tensor_input(inputs[1])), opt, out);
        } else {
          emit(pairing(parse_within(inputs[0], opt), parse_within(inputs[1], opt)), opt, out);
        }
      } else if (name == "compose") {
        // compose g f: apply f first.
        arity(2, 2);
        auto const g = parse_ubp(inputs[0]);
        auto const f = parse_ubp(inputs[1]);
        if (f.size() != g.size()) {
          throw ValidationError("compose: degrees " + std::to_string(g.size()) + " and " + std::to_string(f.size()) +
                                " differ");
        }
        emit(Element::basis(compose(g, f)), opt, out);
      } else if (name == "tilde") {
        arity(1, 1);
        emit(Element::basis(tilde(parse_ubp(inputs[0]))), opt, out);
      } else if (name == "primitive") {
        arity(1, 1);
        bool const p = is_primitive(parse_within(inputs[0], opt));
        out << (opt.json() ? json(p).dump() : std::string(p ? "true" : "false")) << '\n';
      } else if (name == "to-x") {
        arity(1, 1);
        emit(to_X_basis(parse_within(inputs[0], opt)), opt, out);
      } else if (name == "from-x") {
        arity(1, 1);
        emit(from_X_basis(parse_within(inputs[0], opt)), opt, out);
      } else if (name == "to-z") {
        arity(1, 1);
        emit(to_Z_basis(parse_within(inputs[0], opt)), opt, out);
      } else if (name == "from-z") {
        arity(1, 1);
        emit(from_Z_basis(parse_within(inputs[0], opt)), opt, out);
      }
      return kExitSuccess;
    }

    // ---- hasse -------------------------------------------------------------

    std::string dot_escape(std::string const& text) {
      std::string escaped;
      for (char c : text) {
        if (c == '"' || c == '\\') {
          escaped += '\\';
        }
        escaped += c;
      }
      return escaped;
    }

    int cmd_hasse(std::string const& text, bool dot, Options const& opt, std::ostream& out) {
      auto const a = parse_set_partition(text);
      require_within(a.size(), opt, "n");
      auto const diagram = hasse_component(a);
      if (dot) {
        out << "digraph weak_order {\n";
        out << "  label=\"" << dot_escape(to_text(a)) << "\";\n";
        for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
          out << "  n" << i << " [label=\"" << dot_escape(to_text(diagram.nodes[i])) << "\"];\n";
        }
        for (auto const& [lo, hi] : diagram.edges) {
          out << "  n" << lo << " -> n" << hi << ";\n";
        }
        out << "}\n";
      } else if (opt.json()) {
        json nodes = json::array();
        for (auto const& f : diagram.nodes) {
          nodes.push_back(to_json(f));
        }
        json edges = json::array();
        for (auto const& [lo, hi] : diagram.edges) {
          edges.push_back({lo, hi});
        }
        out << json{{"domain", to_json(a)}, {"nodes", nodes}, {"edges", edges}}.dump() << '\n';
      } else {
        out << "nodes: " << diagram.nodes.size() << '\n';
        for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
          out << i << ' ' << to_text(diagram.nodes[i]) << '\n';
        }
        out << "edges: " << diagram.edges.size() << '\n';
        for (auto const& [lo, hi] : diagram.edges) {
          out << lo << " -> " << hi << '\n';
        }
      }
      return kExitSuccess;
    }

    // ---- verify ------------------------------------------------------------

    int report(std::string const& suite, std::vector<verify::CheckResult> const& results, Options const& opt,
               std::ostream& out) {
      bool const passed = verify::all_passed(results);
      if (opt.json()) {
        json checks = json::array();
        for (auto const& r : results) {
          checks.push_back({{"name", r.name},
                            {"anchor", r.anchor},
                            {"passed", r.passed},
                            {"cases", r.cases},
                            {"detail", r.detail}});
        }
        out << json{{"suite", suite}, {"passed", passed}, {"checks", checks}}.dump() << '\n';
      } else {
        std::size_t failures = 0;
        for (auto const& r : results) {
          out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.anchor << "] cases=" << r.cases;
          if (!r.detail.empty()) {
            out << ": " << r.detail;
          }
          out << '\n';
          failures += r.passed ? 0 : 1;
        }
        out << "summary: " << results.size() - failures << " passed, " << failures << " failed\n";
      }
      return passed ? kExitSuccess : kExitCheckFailed;
    }

    int cmd_verify_schurweyl(int n, int m, int r, Options const& opt, std::ostream& out) {
      if (n < 1 || m < 1 || r < 1) {
        throw UsageError("--n, --m and --r must be positive");
      }
      require_within(n, opt, "n");
      auto const commutation = commutation_report(n, m, r);
      auto const rank        = action_span_rank(n, m);
      auto const u           = count_ubp(n);
      bool const asserted    = m >= 2 * n;
      bool const rank_ok     = !asserted || Integer(static_cast<unsigned long>(rank)) == u;

      struct Spot {
        Ubp  f, g;
        bool agrees;
      };
      std::vector<Spot> spots;
      for (int p = 0; p <= n; ++p) {
        for (auto const& f : enumerate_ubp(p)) {
          for (auto const& g : enumerate_ubp(n - p)) {
            spots.push_back({f, g, convolution_action(f, g, m) == element_action_matrix(product(f, g), m, n)});
          }
        }
      }
      bool const commutes = std::all_of(commutation.begin(), commutation.end(), [](auto const& c) { return c.commutes; });
      bool const convolution_ok = std::all_of(spots.begin(), spots.end(), [](auto const& s) { return s.agrees; });
      bool const passed         = commutes && rank_ok && convolution_ok;

      if (opt.json()) {
        json comm = json::array();
        for (auto const& c : commutation) {
          comm.push_back({{"monoid", c.monoid_generator}, {"group", c.group_generator}, {"commutes", c.commutes}});
        }
        json conv = json::array();
        for (auto const& s : spots) {
          conv.push_back({{"f", to_text(s.f)}, {"g", to_text(s.g)}, {"agrees", s.agrees}});
        }
        out << json{{"n", n},
                    {"m", m},
                    {"r", r},
                    {"commutation", comm},
                    {"rank", rank},
                    {"u_n", integer_to_json(u)},
                    {"rank_asserted", asserted},
                    {"convolution", conv},
                    {"passed", passed}}
                   .dump()
            << '\n';
      } else {
        out << "commutation (n,m,r) = (" << n << "," << m << "," << r << ")\n";
        for (auto const& c : commutation) {
          out << "  " << (c.commutes ? "PASS " : "FAIL ") << c.monoid_generator << " with " << c.group_generator
              << '\n';
        }
        out << "rank: " << rank << " (u_n = " << u << ", "
            << (asserted ? (rank_ok ? "equal" : "DIFFERENT") : "not asserted since m < 2n") << ")\n";
        out << "convolution: " << spots.size() << " pairs of total degree " << n << ", "
            << (convolution_ok ? "all agree" : "MISMATCH") << '\n';
        for (auto const& s : spots) {
          if (!s.agrees) {
            out << "  FAIL " << to_text(s.f) << " * " << to_text(s.g) << '\n';
          }
        }
        out << "summary: " << (passed ? "pass" : "fail") << '\n';
      }
      return passed ? kExitSuccess : kExitCheckFailed;
    }

    // ---- series ------------------------------------------------------------

    int cmd_series(int terms, Options const& opt, std::ostream& out, std::ostream& err) {
      if (terms < 0 || terms > kSeriesCeiling) {
        throw UsageError("--terms must be between 0 and " + std::to_string(kSeriesCeiling));
      }
      std::vector<Integer> u;
      for (int k = 0; k <= terms; ++k) {
        u.push_back(count_ubp(k));
      }
      auto const v            = primitive_series(terms);
      bool const recomposed   = series_from_primitives(v) == u;
      auto       join         = [](auto first, auto last) {
        std::string s;
        for (auto it = first; it != last; ++it) {
          s += (s.empty() ? "" : ",") + to_string(*it);
        }
        return s;
      };
      if (opt.json()) {
        json ju = json::array(), jv = json::array();
        for (auto const& x : u) {
          ju.push_back(integer_to_json(x));
        }
        for (auto it = v.begin() + 1; it != v.end(); ++it) {
          jv.push_back(integer_to_json(*it));
        }
        out << json{{"u", ju}, {"v", jv}, {"recomposed", recomposed}}.dump() << '\n';
      } else {
        out << "u: " << join(u.begin(), u.end()) << '\n';
        out << "v: " << join(v.begin() + 1, v.end()) << '\n';
        out << "recomposition: " << (recomposed ? "ok" : "FAILED") << '\n';
      }
      if (!recomposed) {
        err << "error: 1/(1 - V(x)) does not return P(x)\n";
        return kExitCheckFailed;
      }
      return kExitSuccess;
    }

    // ---- enumerate ---------------------------------------------------------

    int cmd_enumerate(std::string const& what, int n, Options const& opt, std::ostream& out) {
      require_within(n, opt, "n");
      json items = json::array();
      auto put   = [&](auto const& x) {
        if (opt.json()) {
          items.push_back(to_json(x));
        } else {
          out << to_text(x) << '\n';
        }
      };
      if (what == "partitions") {
        for (auto const& a : enumerate_set_partitions(n)) {
          put(a);
        }
      } else {
        for (auto const& f : enumerate_ubp(n, opt.ceiling)) {
          put(f);
        }
      }
      if (opt.json()) {
        out << items.dump() << '\n';
      }
      return kExitSuccess;
    }

    // ---- ncsym -------------------------------------------------------------

    int cmd_ncsym(std::string const& direction, std::string const& text, Options const& opt, std::ostream& out) {
      if (direction == "to-z") {
        auto const u = parse_ncsym(text);
        for (auto const& [a, c] : u) {
          require_within(a.size(), opt, "degree");
        }
        emit(to_Z_element(u), opt, out);
      } else {
        auto const u = from_Z_element(parse_within(text, opt));
        out << (opt.json() ? to_json(u).dump() : to_text(u)) << '\n';
      }
      return kExitSuccess;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Uniform block permutations: enumeration, Hopf algebra operations and verification", "ubp"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--ceiling", opt.ceiling, "Largest n that may be enumerated")
        ->envname(kCeilingEnv)
        ->check(CLI::NonNegativeNumber);
    app.add_option("--jobs", opt.jobs, "Worker threads for verification")->check(CLI::PositiveNumber);

    int  count_n = 0;
    auto count   = app.add_subcommand("count", "u_n by formula, recursion and enumeration");
    count->add_option("n", count_n)->required()->check(CLI::NonNegativeNumber);

    std::string              op_name;
    std::vector<std::string> op_inputs;
    auto op = app.add_subcommand("op", "Algebra operations on element text");
    op->add_option("operation", op_name)
        ->required()
        ->check(CLI::IsMember({"product", "coproduct", "antipode", "counit", "pair", "compose", "tilde", "primitive",
                               "to-x", "from-x", "to-z", "from-z"}));
    op->add_option("inputs", op_inputs);

    std::string hasse_a;
    bool        hasse_dot = false;
    auto hasse = app.add_subcommand("hasse", "Weak-order component of the elements with a given domain");
    hasse->add_option("partition", hasse_a)->required();
    hasse->add_flag("--dot", hasse_dot, "Emit Graphviz DOT");

    std::string suite;
    int         max_n = 3;
    int         sw_n = 0, sw_m = 2, sw_r = 2;
    auto verify = app.add_subcommand("verify", "Run an invariant battery");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(verify::suite_names()));
    verify->add_option("--max-n", max_n, "Size bound for the battery")->check(CLI::NonNegativeNumber);
    auto n_opt = verify->add_option("--n", sw_n, "schurweyl: tensor power");
    verify->add_option("--m", sw_m, "schurweyl: dimension of V");
    verify->add_option("--r", sw_r, "schurweyl: order of the torus generator");

    int  terms  = 6;
    auto series = app.add_subcommand("series", "u_n and the primitive dimensions v_n");
    series->add_option("--terms", terms)->check(CLI::NonNegativeNumber);

    std::string what;
    int         enum_n = 0;
    auto enumerate = app.add_subcommand("enumerate", "List set partitions or P_n");
    enumerate->add_option("kind", what)->required()->check(CLI::IsMember({"partitions", "ubp"}));
    enumerate->add_option("n", enum_n)->required()->check(CLI::NonNegativeNumber);

    std::string direction, nc_text;
    auto ncsym = app.add_subcommand("ncsym", "Convert between p-basis text and elements of the Z-span");
    ncsym->add_option("direction", direction)->required()->check(CLI::IsMember({"to-z", "to-p"}));
    ncsym->add_option("input", nc_text)->required();

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kExitSuccess;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitSuccess;
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << '\n';
      return kExitUsageError;
    }

    try {
      if (*count) {
        return cmd_count(count_n, opt, out, err);
      }
      if (*op) {
        return cmd_op(op_name, op_inputs, opt, out);
      }
      if (*hasse) {
        return cmd_hasse(hasse_a, hasse_dot, opt, out);
      }
      if (*verify) {
        if (*n_opt) {
          if (suite != "schurweyl") {
            throw UsageError("--n, --m and --r apply to the schurweyl suite only");
          }
          return cmd_verify_schurweyl(sw_n, sw_m, sw_r, opt, out);
        }
        require_within(max_n, opt, "--max-n");
        auto const results = verify::run_checks(verify::suite_checks(suite, max_n), opt.jobs);
        return report(suite, results, opt, out);
      }
      if (*series) {
        return cmd_series(terms, opt, out, err);
      }
      if (*enumerate) {
        return cmd_enumerate(what, enum_n, opt, out);
      }
      if (*ncsym) {
        return cmd_ncsym(direction, nc_text, opt, out);
      }
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << '\n';
      return kExitUsageError;
    } catch (NotInZSpanError const& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsageError;
    } catch (ValidationError const& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsageError;
    } catch (CeilingError const& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsageError;
    } catch (UsageError const& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsageError;
    }
    return kExitUsageError;
  }

}  // namespace ubp::cli
