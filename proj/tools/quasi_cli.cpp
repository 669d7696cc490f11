// Command-line front end: verify cocycle tables, classify them over roots of
// unity, emit the built-in families, render algebra multiplication tables,
// and multiply quasimatrices with exact cyclotomic arithmetic.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quasi/classify.hpp"
#include "quasi/json_io.hpp"
#include "quasi/quasialgebra.hpp"
#include "quasi/quasimatrix.hpp"

namespace {

using quasi::Json;

// Exit codes: 0 ok, 1 violations found, 2 usage/parse error, 3 limit exceeded.
enum ExitCode : int { kOk = 0, kViolations = 1, kUsage = 2, kLimit = 3 };

/** A user-facing input problem: bad arguments, files, or tokens. */
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommandResult {
    std::string status;  // "ok" or "violations"
    Json payload;
    std::string summary;  // human-readable rendering
};

// ---------------------------------------------------------------------------
// Token parsing: groups, scalars, key=value parameter lists
// ---------------------------------------------------------------------------

// Grammar: factors joined by 'x'; each factor is z<N> or z<N>^<M>.
quasi::GroupSpec parse_group(const std::string& text) {
    std::vector<int> orders;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('x', pos);
        std::string factor = text.substr(pos, end == std::string::npos ? end : end - pos);
        pos = end == std::string::npos ? text.size() : end + 1;
        if (factor.size() < 2 || (factor[0] != 'z' && factor[0] != 'Z'))
            throw UsageError("group '" + text + "': factors look like z4 or z2^3");
        std::size_t caret = factor.find('^');
        long long order = 0, repeat = 1;
        try {
            order = std::stoll(factor.substr(1, caret == std::string::npos
                                                    ? caret
                                                    : caret - 1));
            if (caret != std::string::npos) repeat = std::stoll(factor.substr(caret + 1));
        } catch (const std::exception&) {
            throw UsageError("group '" + text + "': factors look like z4 or z2^3");
        }
        if (order < 1 || repeat < 1 || repeat > 16)
            throw UsageError("group '" + text + "': orders and powers must be positive");
        for (long long i = 0; i < repeat; ++i) orders.push_back(static_cast<int>(order));
    }
    if (orders.empty()) throw UsageError("group: empty specification");
    return quasi::GroupSpec(orders);
}

bool valid_generator_name(const std::string& s) {
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

// One multiplicative factor of a scalar token: name[^exponent], or the
// literals 1 and -1.
struct ScalarFactor {
    std::string name;  // empty for the literal 1
    long long exponent = 1;
};

std::vector<ScalarFactor> split_scalar(const std::string& token) {
    std::vector<ScalarFactor> out;
    std::size_t pos = 0;
    while (pos <= token.size()) {
        std::size_t end = token.find('*', pos);
        std::string part =
            token.substr(pos, end == std::string::npos ? end : end - pos);
        pos = end == std::string::npos ? token.size() + 1 : end + 1;
        if (part == "1") continue;
        if (part == "-1") {
            out.push_back({"zeta_2", 1});
            continue;
        }
        std::size_t caret = part.find('^');
        ScalarFactor f;
        f.name = part.substr(0, caret);
        if (caret != std::string::npos) {
            try {
                f.exponent = std::stoll(part.substr(caret + 1));
            } catch (const std::exception&) {
                throw UsageError("scalar '" + token + "': bad exponent");
            }
        }
        if (!valid_generator_name(f.name))
            throw UsageError("scalar '" + token +
                             "': factors are names like q, zeta_3^2, 1 or -1");
        out.push_back(std::move(f));
    }
    return out;
}

long long torsion_order(const std::string& name) {
    if (name.rfind("zeta_", 0) != 0) return 0;
    try {
        long long n = std::stoll(name.substr(5));
        return n >= 1 ? n : 0;
    } catch (const std::exception&) {
        return 0;
    }
}

// All scalar tokens of one command share a generator system, so collect the
// names first and parse values second.
quasi::GeneratorSpecPtr collect_generators(const std::vector<std::string>& tokens) {
    std::map<std::string, long long> names;
    for (const std::string& t : tokens)
        for (const ScalarFactor& f : split_scalar(t))
            if (!f.name.empty()) names.emplace(f.name, torsion_order(f.name));
    std::vector<quasi::Generator> gens;
    for (const auto& [name, order] : names) gens.push_back({name, order});
    return quasi::GeneratorSpec::make(std::move(gens));
}

quasi::UnitScalar parse_scalar(const std::string& token,
                               const quasi::GeneratorSpecPtr& gens) {
    quasi::UnitScalar out = quasi::UnitScalar::one(gens);
    for (const ScalarFactor& f : split_scalar(token))
        if (!f.name.empty())
            out *= quasi::UnitScalar::generator_power(gens, f.name, f.exponent);
    return out;
}

using ParamMap = std::map<std::string, std::string>;

ParamMap parse_params(const std::vector<std::string>& kvs,
                      const std::vector<std::string>& allowed) {
    ParamMap out;
    for (const std::string& kv : kvs) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= kv.size())
            throw UsageError("parameter '" + kv + "': expected key=value");
        std::string key = kv.substr(0, eq);
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw UsageError("parameter '" + key + "' is not accepted here");
        if (!out.emplace(key, kv.substr(eq + 1)).second)
            throw UsageError("parameter '" + key + "' given twice");
    }
    return out;
}

const std::string& require_param(const ParamMap& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw UsageError("missing required parameter '" + key + "'");
    return it->second;
}

long long parse_int(const std::string& what, const std::string& text) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError(what + ": '" + text + "' is not an integer");
    }
}

// ---------------------------------------------------------------------------
// File and output plumbing
// ---------------------------------------------------------------------------

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void emit(const CommandResult& r, bool json, const std::string& out_path) {
    std::string text = json ? r.payload.dump(2) + "\n" : r.summary;
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    out << text;
}

std::string elem_text(const quasi::GroupElem& x) { return quasi::elem_str(x); }

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

CommandResult run_verify(const std::string& path) {
    quasi::CocycleTable t = [&] {
        try {
            return quasi::table_from_json(read_json_file(path));
        } catch (const std::invalid_argument& e) {
            throw UsageError("'" + path + "': " + e.what());
        }
    }();
    quasi::CocycleReport rep = quasi::check_cocycle(t);
    quasi::IdentityReport ids = quasi::identity_suite(t);

    Json slot_list = Json::array();
    for (const quasi::SlotViolation& v : rep.slot_violations) {
        const char* where = v.slot == quasi::IdentitySlot::left
                                ? "left"
                                : v.slot == quasi::IdentitySlot::middle ? "middle" : "right";
        slot_list.push_back(Json{{"slot", where},
                                 {"x", quasi::elem_to_json(v.x)},
                                 {"y", quasi::elem_to_json(v.y)},
                                 {"value", quasi::unit_to_json(v.value)}});
    }
    Json eq_list = Json::array();
    for (const quasi::EquationViolation& v : rep.equation_violations)
        eq_list.push_back(Json{{"x", quasi::elem_to_json(v.x)},
                               {"y", quasi::elem_to_json(v.y)},
                               {"z", quasi::elem_to_json(v.z)},
                               {"w", quasi::elem_to_json(v.w)},
                               {"lhs", quasi::unit_to_json(v.lhs)},
                               {"rhs", quasi::unit_to_json(v.rhs)}});
    Json checks = Json::array();
    std::size_t applicable = 0, failing = 0;
    for (const quasi::IdentityCheck& c : ids.checks) {
        if (c.applicable) ++applicable;
        if (!c.pass()) ++failing;
        checks.push_back(
            Json{{"name", c.name}, {"applicable", c.applicable}, {"failures", c.failures}});
    }

    bool ok = rep.pass() && ids.all_pass();
    Json payload{{"command", "verify"},
                 {"status", ok ? "ok" : "violations"},
                 {"group", quasi::group_to_json(t.group())},
                 {"cocycle",
                  Json{{"pass", rep.pass()},
                       {"slot_violation_count", rep.slot_violation_count},
                       {"equation_violation_count", rep.equation_violation_count},
                       {"slot_violations", slot_list},
                       {"equation_violations", eq_list}}},
                 {"identities", checks}};

    std::ostringstream hs;
    hs << "group: " << t.group().str() << "\n";
    hs << "cocycle: " << rep.summary() << "\n";
    for (std::size_t i = 0; i < rep.slot_violations.size(); ++i) {
        const quasi::SlotViolation& v = rep.slot_violations[i];
        hs << "  slot " << slot_list[i]["slot"].get<std::string>() << " at x=" << elem_text(v.x)
           << " y=" << elem_text(v.y) << ": " << v.value.str() << "\n";
    }
    for (const quasi::EquationViolation& v : rep.equation_violations)
        hs << "  equation at x=" << elem_text(v.x) << " y=" << elem_text(v.y)
           << " z=" << elem_text(v.z) << " w=" << elem_text(v.w) << ": lhs=" << v.lhs.str()
           << " rhs=" << v.rhs.str() << "\n";
    if (ids.all_pass())
        hs << "identities: " << applicable << " applicable, all hold\n";
    else {
        hs << "identities: " << applicable << " applicable, " << failing << " failing\n";
        for (const quasi::IdentityCheck& c : ids.checks)
            if (!c.pass()) {
                hs << "  " << c.name << ": " << c.failures.size() << " failure(s)";
                if (!c.failures.empty()) hs << "; first: " << c.failures.front();
                hs << "\n";
            }
    }
    hs << "status: " << (ok ? "ok" : "violations") << "\n";
    return {ok ? "ok" : "violations", std::move(payload), hs.str()};
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

CommandResult run_classify(const std::string& group, long long values,
                           unsigned long long limit) {
    quasi::GroupSpec g = parse_group(group);
    std::vector<quasi::CocycleTable> tables = quasi::enumerate_cocycles(g, values, limit);
    std::vector<quasi::CohomologyClass> classes =
        quasi::cohomology_classes(tables, values, limit);
    Json payload = quasi::classification_to_json(g, values, tables, classes);
    payload["command"] = "classify";
    payload["status"] = "ok";

    std::ostringstream hs;
    hs << "group: " << g.str() << "\n";
    hs << "values: mu_" << values << "\n";
    hs << "cocycles: " << tables.size() << "\n";
    hs << "classes: " << classes.size() << "\n";
    for (std::size_t i = 0; i < classes.size(); ++i)
        hs << "  class " << i << ": size " << classes[i].size() << ", representative index "
           << classes[i].representative << "\n";
    hs << "status: ok\n";
    return {"ok", std::move(payload), hs.str()};
}

// ---------------------------------------------------------------------------
// family (shared with `table quasimatrix`)
// ---------------------------------------------------------------------------

const std::vector<std::string> kFamilyNames{"trivial",   "qxyz",      "prop8",   "symmetric",
                                            "octonion",  "trilinear", "z3params"};

quasi::CocycleTable build_family(const std::string& name, const ParamMap& params) {
    auto scalars = [&](std::initializer_list<const char*> keys) {
        std::vector<std::string> tokens;
        for (const char* k : keys) tokens.push_back(require_param(params, k));
        return tokens;
    };
    try {
        if (name == "trivial") {
            quasi::GroupSpec g = parse_group(require_param(params, "group"));
            return quasi::trivial_cocycle(g);
        }
        if (name == "qxyz") {
            long long n = parse_int("n", require_param(params, "n"));
            std::vector<std::string> tokens = scalars({"q"});
            quasi::GeneratorSpecPtr gens = collect_generators(tokens);
            return quasi::qxyz_cocycle(static_cast<int>(n), parse_scalar(tokens[0], gens));
        }
        if (name == "prop8") {
            std::vector<std::string> tokens = scalars({"omega"});
            quasi::GeneratorSpecPtr gens = collect_generators(tokens);
            return quasi::z3_class_representative(parse_scalar(tokens[0], gens));
        }
        if (name == "symmetric") {
            std::vector<std::string> tokens = scalars({"omega"});
            quasi::GeneratorSpecPtr gens = collect_generators(tokens);
            return quasi::z3_symmetric_cocycle(parse_scalar(tokens[0], gens));
        }
        if (name == "octonion") return quasi::octonion_cocycle();
        if (name == "z3params") {
            std::vector<std::string> tokens = scalars({"alpha", "beta", "omega"});
            quasi::GeneratorSpecPtr gens = collect_generators(tokens);
            return quasi::z3_cocycle(parse_scalar(tokens[0], gens),
                                     parse_scalar(tokens[1], gens),
                                     parse_scalar(tokens[2], gens));
        }
        if (name == "trilinear") {
            quasi::GroupSpec g = parse_group(require_param(params, "group"));
            std::vector<std::string> tokens = scalars({"q"});
            std::vector<int> coeffs;
            std::istringstream cs(require_param(params, "coeffs"));
            std::string item;
            while (std::getline(cs, item, ','))
                coeffs.push_back(static_cast<int>(parse_int("coeffs", item)));
            quasi::TrilinearForm form(g.order(0), g.arity(), std::move(coeffs));
            quasi::GeneratorSpecPtr gens = collect_generators(tokens);
            return quasi::trilinear_cocycle(g, form, parse_scalar(tokens[0], gens));
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError("family " + name + ": " + e.what());
    } catch (const std::domain_error& e) {
        throw UsageError("family " + name + ": " + e.what());
    }
    std::string known;
    for (const std::string& f : kFamilyNames) known += (known.empty() ? "" : ", ") + f;
    throw UsageError("unknown family '" + name + "' (known: " + known + ")");
}

const std::map<std::string, std::vector<std::string>> kFamilyParams{
    {"trivial", {"group"}},
    {"qxyz", {"n", "q"}},
    {"prop8", {"omega"}},
    {"symmetric", {"omega"}},
    {"octonion", {}},
    {"trilinear", {"group", "coeffs", "q"}},
    {"z3params", {"alpha", "beta", "omega"}}};

CommandResult run_family(const std::string& name, const std::vector<std::string>& kvs) {
    auto it = kFamilyParams.find(name);
    if (it == kFamilyParams.end()) build_family(name, {});  // throws with the known names
    quasi::CocycleTable t = build_family(name, parse_params(kvs, it->second));
    Json payload = quasi::table_to_json(t);
    std::string text = payload.dump(2) + "\n";
    return {"ok", std::move(payload), text};
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

CommandResult run_table(const std::string& what, const std::vector<std::string>& kvs) {
    std::optional<quasi::QuasiAlgebra> alg;
    if (what == "octonion") {
        parse_params(kvs, {});
        alg = quasi::octonion_algebra();
    } else if (what == "example11") {
        ParamMap params = parse_params(kvs, {"q"});
        std::vector<std::string> tokens{require_param(params, "q")};
        quasi::GeneratorSpecPtr gens = collect_generators(tokens);
        quasi::UnitScalar q = parse_scalar(tokens[0], gens);
        if (!q.pow(3).is_one())
            throw UsageError("example11: q must satisfy q^3 = 1 (for example zeta_3)");
        quasi::GroupSpec g({3});
        quasi::CochainTable f(g, q.spec());
        for (int x = 1; x < 3; ++x)
            for (int y = 1; y < 3; ++y) f.set({x}, {y}, q.pow(y - x));
        alg = quasi::twisted_group_algebra(f);
    } else if (what == "quasimatrix") {
        ParamMap params = parse_params(kvs, {"n", "phi", "q", "alpha", "beta", "omega"});
        long long n = parse_int("n", require_param(params, "n"));
        ParamMap inner = params;
        inner.erase("phi");
        const std::string& phi_name = require_param(params, "phi");
        if (phi_name == "trivial") inner.emplace("group", "z" + std::to_string(n));
        quasi::CocycleTable phi = build_family(phi_name, inner);
        if (!phi.group().cyclic() || phi.group().size() != static_cast<std::size_t>(n))
            throw UsageError("quasimatrix: phi must live on the cyclic group of order n");
        try {
            alg = quasi::quasimatrix_algebra(phi);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("quasimatrix: ") + e.what());
        }
    } else {
        throw UsageError("unknown construction '" + what +
                         "' (known: octonion, example11, quasimatrix)");
    }

    Json payload = quasi::algebra_to_json(*alg);
    payload["rendered"] = quasi::multiplication_table(*alg);
    return {"ok", std::move(payload), quasi::multiplication_table(*alg)};
}

// ---------------------------------------------------------------------------
// qmatmul
// ---------------------------------------------------------------------------

CommandResult run_qmatmul(const std::string& a_path, const std::string& b_path,
                          const std::string& phi_path,
                          const std::vector<std::string>& embeds) {
    auto load_matrix = [&](const std::string& path) {
        try {
            return quasi::matrix_from_json(read_json_file(path));
        } catch (const std::invalid_argument& e) {
            throw UsageError("'" + path + "': " + e.what());
        }
    };
    quasi::CycloMatrix a = load_matrix(a_path);
    quasi::CycloMatrix b = load_matrix(b_path);
    quasi::CocycleTable phi = [&] {
        try {
            return quasi::table_from_json(read_json_file(phi_path));
        } catch (const std::invalid_argument& e) {
            throw UsageError("'" + phi_path + "': " + e.what());
        }
    }();

    std::map<std::string, quasi::Cyclotomic> assignment;
    for (const std::string& kv : embeds) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= kv.size())
            throw UsageError("--embed '" + kv + "': expected name=scalar");
        std::string name = kv.substr(0, eq);
        std::string token = kv.substr(eq + 1);
        quasi::GeneratorSpecPtr gens = collect_generators({token});
        try {
            assignment.emplace(
                name, quasi::embed_unit(parse_scalar(token, gens), a.root_order()));
        } catch (const std::exception& e) {
            throw UsageError("--embed '" + kv + "': " + e.what());
        }
    }

    try {
        quasi::CycloMatrix p = quasi::quasimatrix_product(a, b, phi, assignment);
        Json payload = quasi::matrix_to_json(p);
        return {"ok", std::move(payload), p.str()};
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
}

unsigned long long initial_limit() {
    const char* env = std::getenv("QUASI_SEARCH_LIMIT");
    if (!env) return quasi::kDefaultSearchLimit;
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("QUASI_SEARCH_LIMIT='") + env +
                         "' is not a nonnegative integer");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact kernel for cocycles on finite abelian groups and the algebras they twist"};
    app.require_subcommand(1);

    bool json = false;
    std::string out_path;
    auto add_output_options = [&](CLI::App* sub) {
        sub->add_flag("--json", json, "emit machine-readable JSON instead of text");
        sub->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    auto* verify = app.add_subcommand("verify", "check a cocycle table file");
    std::string verify_path;
    verify->add_option("table", verify_path, "JSON table file")->required();

    auto* classify = app.add_subcommand("classify", "enumerate and classify cocycles");
    std::string classify_group = "z3";
    long long classify_values = 3;
    unsigned long long limit_flag = 0;
    classify->add_option("--group", classify_group, "group, e.g. z3 or z2^3")->required();
    classify->add_option("--values", classify_values, "coefficient roots of unity mu_N")
        ->required();
    auto* limit_opt =
        classify->add_option("--limit", limit_flag, "search budget (overrides env)");

    auto* family = app.add_subcommand("family", "emit a built-in cocycle table");
    std::string family_name;
    std::vector<std::string> family_kvs;
    family->add_option("name", family_name,
                       "trivial | qxyz | prop8 | symmetric | octonion | trilinear | z3params")
        ->required();
    family->add_option("params", family_kvs, "key=value parameters");

    auto* table = app.add_subcommand("table", "render an algebra multiplication table");
    std::string table_what;
    std::vector<std::string> table_kvs;
    table->add_option("construction", table_what, "octonion | example11 | quasimatrix")
        ->required();
    table->add_option("params", table_kvs, "key=value parameters");

    auto* qmatmul = app.add_subcommand("qmatmul", "multiply two quasimatrices");
    std::string a_path, b_path, phi_path;
    std::vector<std::string> embeds;
    qmatmul->add_option("a", a_path, "left matrix JSON file")->required();
    qmatmul->add_option("b", b_path, "right matrix JSON file")->required();
    qmatmul->add_option("phi", phi_path, "cocycle table JSON file")->required();
    qmatmul->add_option("--embed", embeds, "assign a free generator, e.g. q=zeta_9^3");

    for (CLI::App* sub : {verify, classify, family, table, qmatmul}) add_output_options(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        CommandResult result;
        if (*verify)
            result = run_verify(verify_path);
        else if (*classify)
            result = run_classify(classify_group, classify_values,
                                  limit_opt->count() ? limit_flag : initial_limit());
        else if (*family)
            result = run_family(family_name, family_kvs);
        else if (*table)
            result = run_table(table_what, table_kvs);
        else
            result = run_qmatmul(a_path, b_path, phi_path, embeds);
        emit(result, json, out_path);
        return result.status == "ok" ? kOk : kViolations;
    } catch (const quasi::SearchLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kLimit;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
