#include "sparsemult/cli.hpp"

#include "sparsemult/atlas.hpp"
#include "sparsemult/classify.hpp"
#include "sparsemult/construct.hpp"
#include "sparsemult/errors.hpp"
#include "sparsemult/examples.hpp"
#include "sparsemult/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace sparsemult {

namespace {

struct Request {
    std::string subcommand;
    std::string input_path;
    std::string inline_json;
    std::string output_path;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::size_t> truncation;
    std::size_t retries = 16;
    // reproduce
    std::string example;
    std::size_t n = 3;
    std::int64_t box = 0;
    bool serial = false;
    bool entries = false;
};

Json request_json(const Request& r, const Json& input) {
    Json j{{"subcommand", r.subcommand}, {"seed", r.seed}};
    if (!input.is_null()) j["input"] = input;
    if (r.subcommand == "construct" || r.subcommand == "multipoint") {
        j["retry_budget"] = r.retries;
        if (r.truncation) j["truncation"] = *r.truncation;
    }
    if (r.subcommand == "reproduce") {
        j["example"] = r.example;
        if (r.example == "ex10") j["n"] = r.n;
        if (r.example == "triangle-atlas" || r.example == "th2-atlas") {
            j["box"] = r.box;
            j["serial"] = r.serial;
        }
    }
    return j;
}

Json read_input(const Request& r) {
    std::string text;
    if (!r.inline_json.empty() && !r.input_path.empty()) throw InvalidInput("give either --input or --json, not both");
    if (!r.inline_json.empty()) {
        text = r.inline_json;
    } else if (!r.input_path.empty()) {
        std::ifstream in(r.input_path);
        if (!in) throw InvalidInput("cannot read " + r.input_path);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        throw InvalidInput("missing input (--input FILE or --json TEXT)");
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

std::pair<SupportSet, SupportSet> pair_input(const Json& in, std::initializer_list<const char*> allowed) {
    require_fields(in, allowed, "request");
    return {support_from_json(field(in, "A", "request")), support_from_json(field(in, "B", "request"))};
}

std::size_t size_field(const Json& j, const char* key) {
    const Json& v = field(j, key, "request");
    if (!v.is_number_unsigned()) throw InvalidInput(std::string(key) + " must be a non-negative integer");
    return v.get<std::size_t>();
}

// --- subcommands ------------------------------------------------------------

int cmd_bounds(const Request& r, const Json& in, Json& result) {
    const auto [a, b] = pair_input(in, {"A", "B"});
    const std::size_t eroded = erode(convex_hull(a), b).size();
    const std::int64_t d_est = static_cast<std::int64_t>(a.size()) - static_cast<std::int64_t>(eroded) - 1;
    const std::int64_t mv = mixed_volume(convex_hull(a), convex_hull(b));
    result = Json{{"size_A", a.size()}, {"eroded_size", eroded}, {"D_est", d_est}, {"mixed_volume", mv}};
    // dim_V for a generic f on B through (1, 1)
    if (b.size() >= 2) {
        Rng rng(r.seed);
        std::vector<Rational> c;
        Rational sum = 0;
        for (std::size_t i = 0; i + 1 < b.size(); ++i) {
            c.push_back(Rational(draw_nonzero_coefficient(rng)));
            sum += c.back();
        }
        if (is_zero(sum)) c.back() += 1, sum += 1;
        c.push_back(-sum);
        const LaurentPolynomial f = LaurentPolynomial::from_coefficients(b, c);
        const DimV dv = compute_dim_V(a, f);
        const std::int64_t d = static_cast<std::int64_t>(a.size()) - static_cast<std::int64_t>(dv.dim) - 1;
        result["f"] = to_json(f);
        result["dim_V"] = dv.dim;
        result["D"] = d;
        result["chain"] = Json{{"D_est", d_est}, {"D", d}, {"mixed_volume", mv},
                               {"holds", d_est <= d && d <= mv}};
    }
    return kOk;
}

ConstructOptions construct_options(const Request& r) {
    ConstructOptions o;
    o.retry_budget = r.retries;
    o.truncation = r.truncation;
    return o;
}

int cmd_construct(const Request& r, const Json& in, Json& result) {
    const auto [a, b] = pair_input(in, {"A", "B", "m"});
    const std::size_t m = size_field(in, "m");
    result = to_json(construct_prescribed(a, b, m, r.seed, construct_options(r)));
    return kOk;
}

int cmd_multipoint(const Request& r, const Json& in, Json& result) {
    const auto [a, b] = pair_input(in, {"A", "B", "multiplicities"});
    const Json& ms = field(in, "multiplicities", "request");
    if (!ms.is_array()) throw InvalidInput("multiplicities must be an array");
    std::vector<std::size_t> m;
    for (const auto& v : ms) {
        if (!v.is_number_unsigned()) throw InvalidInput("multiplicities must be non-negative integers");
        m.push_back(v.get<std::size_t>());
    }
    result = to_json(construct_multipoint(a, b, m, r.seed, construct_options(r)));
    return kOk;
}

bool smooth_at(const LaurentPolynomial& f, const TorusPoint& p) {
    return !is_zero(f.derivative(Variable::X).evaluate(p.x, p.y)) ||
           !is_zero(f.derivative(Variable::Y).evaluate(p.x, p.y));
}

int cmd_verify(const Request&, const Json& in, Json& result) {
    const ConstructedSystem sys = constructed_system_from_json(in);
    Json checks = Json::array();
    bool ok = true;
    for (std::size_t i = 0; i < sys.points.size(); ++i) {
        const TorusPoint& p = sys.points[i];
        const std::size_t claimed = sys.multiplicities[i];
        Json c{{"point", to_json(p)}, {"claimed", claimed}, {"exact", sys.exact}};
        if (smooth_at(sys.f, p) || smooth_at(sys.g, p)) {
            const bool f_smooth = smooth_at(sys.f, p);
            const SmoothIntersection s = f_smooth ? intersection_multiplicity_smooth(sys.f, sys.g, p)
                                                  : intersection_multiplicity_smooth(sys.g, sys.f, p);
            c["method"] = "branch order";
            if (s.order) c["measured"] = *s.order;
            else c["measured"] = "non-isolated";
            const bool pass = s.order && (sys.exact ? *s.order == claimed : *s.order >= claimed);
            c["pass"] = pass;
            ok = ok && pass;
        } else {
            // neither curve is smooth: the stored factorized certificates are replayed
            bool pass = !sys.certificates.empty();
            for (const auto& cert : sys.certificates) pass = pass && replay(cert);
            c["method"] = "certificate replay";
            c["pass"] = pass;
            ok = ok && pass;
        }
        checks.push_back(c);
    }
    Json replays = Json::array();
    for (const auto& cert : sys.certificates) {
        const bool pass = replay(cert);
        replays.push_back({{"kind", to_string(cert.kind)}, {"replayed", pass}});
        ok = ok && pass;
    }
    result = Json{{"verified", ok}, {"checks", checks}, {"certificate_replay", replays}};
    return ok ? kOk : kVerificationFailure;
}

int cmd_classify(const Request& r, const Json& in, Json& result) {
    const auto [a, b] = pair_input(in, {"A", "B"});
    result = to_json(decide_mult3(a, b, r.seed));
    return kOk;
}

int cmd_triangle(const Request&, const Json& in, Json& result) {
    require_fields(in, {"triangle"}, "request");
    result = to_json(triangle_inflection(support_from_json(field(in, "triangle", "request"))));
    return kOk;
}

int cmd_univariate(const Request&, const Json& in, Json& result) {
    require_fields(in, {"exponents", "multiplicity"}, "request");
    const Json& ex = field(in, "exponents", "request");
    if (!ex.is_array()) throw InvalidInput("exponents must be an array");
    std::vector<std::int64_t> e;
    for (const auto& v : ex) {
        if (!v.is_number_integer()) throw InvalidInput("exponents must be integers");
        e.push_back(v.get<std::int64_t>());
    }
    result = to_json(construct_univariate(e, size_field(in, "multiplicity")));
    return kOk;
}

// --- reproduce ----------------------------------------------------------------

struct Checks {
    Json list = Json::array();
    bool ok = true;
    void add(const std::string& name, const Json& expected, const Json& actual) {
        const bool pass = expected == actual;
        list.push_back({{"check", name}, {"expected", expected}, {"actual", actual}, {"pass", pass}});
        ok = ok && pass;
    }
};

int reproduce_exim_cmd(const Request& r, Json& result, std::ostream& err) {
    err << "exim: resultant identity and order conditions\n";
    const InflectionExampleReport rep = reproduce_exim(r.seed);
    Checks c;
    c.add("mixed volume", 4, std::stoi(rep.mixed_volume.get_str()));
    c.add("resultant equals (x-1)(-1+a-x-x^2-x^3+bx^3) up to a constant", true, rep.resultant_ratio.has_value());
    result = to_json(rep);
    result["notes"] = Json::array(
        {"R(1)=R'(1)=R''(1)=0 is solvable (see order3_conditions_solution); multiplicity 3 is attained",
         "adding R'''(1)=0 makes the conditions inconsistent; multiplicity 4 is not attained"});
    result["checks"] = c.list;
    return c.ok ? kOk : kVerificationFailure;
}

int reproduce_ex3_cmd(const Request& r, Json& result, std::ostream& err) {
    Checks c;
    Json systems = Json::array();
    for (const auto& [n, k, l] : {std::tuple{3, 2, 0}, std::tuple{4, 3, 2}, std::tuple{5, 4, 0}}) {
        err << "ex3: n=" << n << " k=" << k << " l=" << l << "\n";
        const LineProductSystem s = build_example_ex3(n, k, l, r.seed);
        const LineSumMultiplicity m = origin_multiplicity_line_product(s.lines, s.v);
        Json j = to_json(s);
        j["measured"] = m.multiplicity;
        j["per_line"] = m.per_line;
        j["certificate"] = to_json(m.certificate);
        systems.push_back(j);
        c.add("origin multiplicity for (n,k,l)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                  std::to_string(l) + ")",
              s.expected, m.multiplicity);
    }
    result = Json{{"systems", systems}, {"checks", c.list}};
    return c.ok ? kOk : kVerificationFailure;
}

int reproduce_ex10_cmd(const Request& r, Json& result, std::ostream& err) {
    const std::size_t n = r.n;
    Json per = Json::array();
    std::vector<std::size_t> achievable;
    for (std::size_t m = 1; m <= 2 * n; ++m) {
        err << "ex10: n=" << n << " m=" << m << "\n";
        const auto v = build_example_ex10(n, m);
        if (const auto* sys = std::get_if<ConstructedSystem>(&v)) {
            achievable.push_back(m);
            per.push_back({{"m", m}, {"achievable", true}, {"system", to_json(*sys)}});
        } else {
            per.push_back({{"m", m}, {"achievable", false}, {"report", to_json(std::get<GapImpossibility>(v))}});
        }
    }
    Checks c;
    if (n == 3) c.add("achievable multiplicities", Json(std::vector<std::size_t>{1, 2, 3, 4, 6}), Json(achievable));
    const auto phi = phi_sequence(n + 1);
    c.add("phi_k > 0 for k <= n+1", true,
          std::all_of(phi.begin(), phi.end(), [](const Integer& x) { return x > 0; }));
    result = Json{{"n", n}, {"achievable", achievable}, {"multiplicities", per}, {"checks", c.list}};
    return c.ok ? kOk : kVerificationFailure;
}

int reproduce_triangle_atlas(const Request& r, Json& result, std::ostream& err) {
    const std::int64_t box = r.box > 0 ? r.box : 5;
    err << "triangle atlas: box [0," << box << "]^2, " << (r.serial ? "serial" : "parallel") << "\n";
    const TriangleAtlas a = r.serial ? triangle_atlas_serial(box) : triangle_atlas_parallel(box);
    result = to_json(a, r.entries);
    Checks c;
    c.add("mismatches", 0, a.mismatches);
    c.add("He(0), He(-1) identity failures", 0, a.identity_failures);
    result["checks"] = c.list;
    return c.ok ? kOk : kVerificationFailure;
}

int reproduce_pair_atlas(const Request& r, Json& result, std::ostream& err) {
    const std::int64_t box = r.box > 0 ? r.box : 3;
    err << "pair atlas: " << box << "x" << box << " box, " << (r.serial ? "serial" : "parallel") << "\n";
    const PairAtlas a = r.serial ? pair_atlas_serial(box, r.seed) : pair_atlas_parallel(box, r.seed);
    result = to_json(a, r.entries);
    Checks c;
    c.add("mv verdict agrees with the catalogue", 0, a.mismatches);
    c.add("achievable pairs with an applicable route but no witness", 0, a.unresolved);
    result["checks"] = c.list;
    return c.ok ? kOk : kVerificationFailure;
}

int cmd_reproduce(const Request& r, Json& result, std::ostream& err) {
    if (r.example == "exim") return reproduce_exim_cmd(r, result, err);
    if (r.example == "ex3") return reproduce_ex3_cmd(r, result, err);
    if (r.example == "ex10") return reproduce_ex10_cmd(r, result, err);
    if (r.example == "triangle-atlas") return reproduce_triangle_atlas(r, result, err);
    if (r.example == "th2-atlas") return reproduce_pair_atlas(r, result, err);
    throw InvalidInput("unknown example " + r.example);
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const HypothesisViolation*>(&e)) return kHypothesisViolation;
    if (dynamic_cast<const RetryBudgetExhausted*>(&e)) return kRetryBudgetExhausted;
    if (dynamic_cast<const InvalidInput*>(&e) || dynamic_cast<const ArithmeticOverflow*>(&e) ||
        dynamic_cast<const NonUnitError*>(&e))
        return kInvalidInput;
    return kVerificationFailure;
}

const char* error_kind(int code) {
    switch (code) {
        case kHypothesisViolation: return "HypothesisViolation";
        case kRetryBudgetExhausted: return "RetryBudgetExhausted";
        case kInvalidInput: return "InvalidInput";
        default: return "VerificationFailure";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Request r;
    CLI::App app{"Sparse polynomial systems: roots of high multiplicity", "sparsemult"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", kVersion);

    auto add_io = [&r](CLI::App* s) {
        s->add_option("-i,--input", r.input_path, "JSON request file");
        s->add_option("-j,--json", r.inline_json, "inline JSON request");
        s->add_option("-o,--output", r.output_path, "write the report here instead of stdout");
        s->add_option("-s,--seed", r.seed, "64-bit seed for the mt19937_64 engine")->default_val(kDefaultSeed);
    };
    const std::vector<std::pair<const char*, const char*>> plain{
        {"bounds", "support sizes, erosion, D and mixed volume"},
        {"construct", "osculating curve with a root of prescribed multiplicity at (1,1)"},
        {"multipoint", "osculating curve with prescribed multiplicities at several points"},
        {"verify", "re-check a constructed system"},
        {"classify", "decide whether a support pair admits a root of multiplicity >= 3"},
        {"triangle", "inflection points of trinomial curves"},
        {"univariate", "sparse univariate polynomial with a root of multiplicity l at 1"}};
    for (const auto& [name, help] : plain) {
        CLI::App* s = app.add_subcommand(name, help);
        add_io(s);
        if (std::string(name) == "construct" || std::string(name) == "multipoint") {
            s->add_option("--truncation", r.truncation, "initial series truncation");
            s->add_option("--retries", r.retries, "retry budget")->default_val(16);
        }
    }
    CLI::App* rep = app.add_subcommand("reproduce", "run a worked example and check its values");
    rep->add_option("example", r.example, "exim | ex3 | ex10 | triangle-atlas | th2-atlas")
        ->required()
        ->check(CLI::IsMember({"exim", "ex3", "ex10", "triangle-atlas", "th2-atlas"}));
    rep->add_option("-n,--n", r.n, "odd n >= 3 for ex10")->default_val(3);
    rep->add_option("--box", r.box, "atlas box size");
    rep->add_flag("--serial", r.serial, "use the serial atlas kernel");
    rep->add_flag("--entries", r.entries, "include every atlas entry in the report");
    rep->add_option("-o,--output", r.output_path, "write the report here instead of stdout");
    rep->add_option("-s,--seed", r.seed, "64-bit seed")->default_val(kDefaultSeed);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        err << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInvalidInput;
    }
    r.subcommand = app.get_subcommands().front()->get_name();

    Json input;
    Json report{{"version", kVersion}};
    int code = kOk;
    try {
        if (r.subcommand != "reproduce") input = read_input(r);
        report["request"] = request_json(r, input);
        Json result;
        if (r.subcommand == "bounds") code = cmd_bounds(r, input, result);
        else if (r.subcommand == "construct") code = cmd_construct(r, input, result);
        else if (r.subcommand == "multipoint") code = cmd_multipoint(r, input, result);
        else if (r.subcommand == "verify") code = cmd_verify(r, input, result);
        else if (r.subcommand == "classify") code = cmd_classify(r, input, result);
        else if (r.subcommand == "triangle") code = cmd_triangle(r, input, result);
        else if (r.subcommand == "univariate") code = cmd_univariate(r, input, result);
        else code = cmd_reproduce(r, result, err);
        report["status"] = code == kOk ? "ok" : "failed";
        report["result"] = std::move(result);
    } catch (const std::exception& e) {
        code = exit_code_for(e);
        if (!report.contains("request")) report["request"] = request_json(r, input);
        report["status"] = "error";
        report["error"] = Json{{"kind", error_kind(code)}, {"message", e.what()}};
        err << error_kind(code) << ": " << e.what() << "\n";
    }

    const std::string text = report.dump(2) + "\n";
    if (r.output_path.empty()) {
        out << text;
    } else {
        std::ofstream f(r.output_path);
        if (!f) {
            err << "cannot write " << r.output_path << "\n";
            return kInvalidInput;
        }
        f << text;
    }
    return code;
}

}  // namespace sparsemult
