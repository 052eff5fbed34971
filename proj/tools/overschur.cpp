// Command-line front end: counting, identity checks, the Ebar -> Bbar
// bijection and the Cbar construction.
//
// Exit status: 0 success / identity holds, 1 mismatch or membership failure,
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <overschur/bijection.hpp>
#include <overschur/construction.hpp>
#include <overschur/enumerate.hpp>
#include <overschur/identities.hpp>
#include <overschur/partition.hpp>
#include <overschur/serialize.hpp>

namespace
{

using nlohmann::json;
using namespace overschur;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

enum class Format { Json, Csv, Text };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    int d = 7;
    int r = 2;
    std::string format = "json";

    Params params() const
    {
        try {
            return Params(d, r);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }

    Format fmt() const
    {
        if (format == "json") {
            return Format::Json;
        }
        if (format == "csv") {
            return Format::Csv;
        }
        return Format::Text;
    }
};

void add_common(CLI::App *cmd, CommonOptions &opts)
{
    cmd->add_option("--d", opts.d, "Modulus d (>= 3)")->capture_default_str();
    cmd->add_option("--r", opts.r, "Residue r (1 <= r < d/2)")->capture_default_str();
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
}

// Literal JSON, "@path", or "-" for standard input.
json read_json_arg(const std::string &arg)
{
    std::string text;
    if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) {
            throw UsageError("cannot open " + arg.substr(1));
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        text = arg;
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw UsageError(std::string("malformed JSON input: ") + e.what());
    }
}

template <typename T>
T decode(const json &j, const char *what)
{
    try {
        return j.get<T>();
    } catch (const json::exception &e) {
        throw UsageError(std::string("malformed ") + what + ": " + e.what());
    }
}

void print_dmodular_text(std::ostream &os, const DModularOverpartition &mu)
{
    os << "(";
    for (std::size_t i = 0; i < mu.parts.size(); ++i) {
        os << (i ? ", " : "") << mu.parts[i].length << " " << label_name(mu.parts[i].label);
    }
    os << ")";
}

void print_dmodular_csv(std::ostream &os, const DModularOverpartition &mu)
{
    os << "length,label\n";
    for (const auto &p : mu.parts) {
        os << p.length << "," << label_name(p.label) << "\n";
    }
}

// ---------------------------------------------------------------- count

struct CountOptions {
    CommonOptions common;
    std::string family;
    int max_n = 60;
};

int run_count(const CountOptions &opts)
{
    const auto family = parse_family(opts.family);
    if (!family) {
        throw UsageError("unknown family \"" + opts.family + "\"");
    }
    if (opts.max_n < 0) {
        throw UsageError("--max-n must be non-negative");
    }
    const auto params = opts.common.params();
    const auto table = count_table(*family, params, opts.max_n);
    switch (opts.common.fmt()) {
        case Format::Json: {
            json rows = json::array();
            for (std::size_t n = 0; n < table.size(); ++n) {
                rows.push_back({{"n", n}, {"count", table[n]}});
            }
            json out{{"family", opts.family}, {"d", params.d()}, {"r", params.r()}, {"counts", rows}};
            std::cout << out.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "n,count\n";
            for (std::size_t n = 0; n < table.size(); ++n) {
                std::cout << n << "," << table[n] << "\n";
            }
            break;
        case Format::Text:
            for (std::size_t n = 0; n < table.size(); ++n) {
                std::cout << n << " " << table[n] << "\n";
            }
            break;
    }
    return exit_ok;
}

// ---------------------------------------------------------------- verify / series

struct VerifyCliOptions {
    CommonOptions common;
    std::string identity;
    int order = -1;
    int corrupt = -1;
    std::string side = "both";
};

IdentityId identity_or_throw(const std::string &name)
{
    const auto id = parse_identity(name);
    if (!id) {
        throw UsageError("unknown identity \"" + name + "\"");
    }
    return *id;
}

std::size_t effective_order(IdentityId id, int requested)
{
    if (requested >= 0) {
        return static_cast<std::size_t>(requested);
    }
    return uses_enumeration(id) ? 60 : 300;
}

int run_verify(const VerifyCliOptions &opts)
{
    const auto id = identity_or_throw(opts.identity);
    const auto params = opts.common.params();
    VerifyOptions vopts;
    if (opts.corrupt >= 0) {
        vopts.corrupt_at = static_cast<std::size_t>(opts.corrupt);
    }
    const auto rep = verify(id, params, effective_order(id, opts.order), vopts);
    switch (opts.common.fmt()) {
        case Format::Json:
            std::cout << json(rep).dump(2) << "\n";
            break;
        case Format::Csv:
            std::cout << "identity,d,r,order,status,at,at_m,lhs_coeff,rhs_coeff\n"
                      << identity_name(rep.identity) << "," << rep.d << "," << rep.r << "," << rep.order << ","
                      << (rep.equal ? "equal" : "mismatch") << ",";
            if (rep.at) {
                std::cout << *rep.at;
            }
            std::cout << ",";
            if (rep.at_m) {
                std::cout << *rep.at_m;
            }
            std::cout << ",";
            if (rep.at) {
                std::cout << rep.lhs_coeff << "," << rep.rhs_coeff;
            } else {
                std::cout << ",";
            }
            std::cout << "\n";
            break;
        case Format::Text:
            std::cout << identity_name(rep.identity) << " d=" << rep.d << " r=" << rep.r << " order=" << rep.order
                      << ": ";
            if (rep.equal) {
                std::cout << "equal\n";
            } else {
                std::cout << "mismatch at q^" << *rep.at;
                if (rep.at_m) {
                    std::cout << " (m=" << *rep.at_m << ")";
                }
                std::cout << ": " << rep.lhs_coeff << " vs " << rep.rhs_coeff << "\n";
            }
            break;
    }
    return rep.equal ? exit_ok : exit_failure;
}

int run_series(const VerifyCliOptions &opts)
{
    const auto id = identity_or_throw(opts.identity);
    if (id == IdentityId::CbarBivariate) {
        throw UsageError("cbar-bivariate is a table; use verify");
    }
    if (opts.side != "lhs" && opts.side != "rhs" && opts.side != "both") {
        throw UsageError("--side must be lhs, rhs or both");
    }
    const auto params = opts.common.params();
    const auto order = effective_order(id, opts.order);
    const auto sides = identity_sides(id, params, order);
    const bool want_lhs = opts.side != "rhs";
    const bool want_rhs = opts.side != "lhs";

    switch (opts.common.fmt()) {
        case Format::Json: {
            json out{{"identity", opts.identity}, {"d", params.d()}, {"r", params.r()}, {"order", order}};
            for (auto [want, name, s] : {std::tuple{want_lhs, "lhs", &sides.lhs}, std::tuple{want_rhs, "rhs", &sides.rhs}}) {
                if (!want) {
                    continue;
                }
                json coeffs = json::array();
                for (const auto &c : s->coeffs()) {
                    coeffs.push_back(bigint_to_json(c));
                }
                out[name] = coeffs;
            }
            std::cout << out.dump(2) << "\n";
            break;
        }
        case Format::Csv:
        case Format::Text: {
            const char sep = opts.common.fmt() == Format::Csv ? ',' : ' ';
            if (opts.common.fmt() == Format::Csv) {
                std::cout << "n" << (want_lhs ? ",lhs" : "") << (want_rhs ? ",rhs" : "") << "\n";
            }
            for (std::size_t n = 0; n <= order; ++n) {
                std::cout << n;
                if (want_lhs) {
                    std::cout << sep << sides.lhs[n];
                }
                if (want_rhs) {
                    std::cout << sep << sides.rhs[n];
                }
                std::cout << "\n";
            }
            break;
        }
    }
    return exit_ok;
}

// ---------------------------------------------------------------- bijection

struct BijectionOptions {
    CommonOptions common;
    std::string direction;
    std::string input;
    int max_n = 50;
};

int membership_failure(const std::string &what)
{
    std::cerr << "overschur: " << what << "\n";
    return exit_failure;
}

int run_bijection_forward(const BijectionOptions &opts, const Params &params)
{
    if (opts.input.empty()) {
        throw UsageError("forward needs --input (a triple object or an ebar overpartition array)");
    }
    const auto j = read_json_arg(opts.input);
    PartitionTriple t;
    if (j.is_array()) {
        auto pi = decode<Overpartition>(j, "overpartition");
        pi.canonicalize();
        if (auto v = family_violation(pi, FamilyId::Ebar, params)) {
            return membership_failure("input is not in ebar: " + *v);
        }
        t = decompose(pi, params);
    } else {
        t = decode<PartitionTriple>(j, "triple");
        if (auto v = triple_violation(t)) {
            return membership_failure("invalid triple: " + *v);
        }
    }
    const auto mu = insert(t, params);
    const auto lambda = from_dmodular(mu, params);
    switch (opts.common.fmt()) {
        case Format::Json:
            std::cout << json{{"triple", t}, {"dmodular", mu}, {"overpartition", lambda}, {"weight", weight(mu, params)}}
                             .dump(2)
                      << "\n";
            break;
        case Format::Csv:
            print_dmodular_csv(std::cout, mu);
            break;
        case Format::Text:
            std::cout << "triple " << t << "\nmu ";
            print_dmodular_text(std::cout, mu);
            std::cout << "\nlambda " << lambda << "\nweight " << weight(mu, params) << "\n";
            break;
    }
    return exit_ok;
}

int run_bijection_inverse(const BijectionOptions &opts, const Params &params)
{
    if (opts.input.empty()) {
        throw UsageError("inverse needs --input (a d-modular array or a bbar overpartition array)");
    }
    const auto j = read_json_arg(opts.input);
    if (!j.is_array()) {
        throw UsageError("inverse input must be a JSON array");
    }
    DModularOverpartition mu;
    if (!j.empty() && j.front().contains("value")) {
        auto lambda = decode<Overpartition>(j, "overpartition");
        lambda.canonicalize();
        if (auto v = family_violation(lambda, FamilyId::Bbar, params)) {
            return membership_failure("input is not in bbar: " + *v);
        }
        mu = to_dmodular(lambda, params);
    } else {
        mu = decode<DModularOverpartition>(j, "d-modular overpartition");
    }
    if (auto v = family_violation(mu, FamilyId::Bbar, params)) {
        return membership_failure("input is not in bbar: " + *v);
    }
    const auto t = invert(mu, params);
    const auto pi = recompose(t, params);
    switch (opts.common.fmt()) {
        case Format::Json:
            std::cout << json{{"triple", t}, {"overpartition", pi}, {"weight", weight(t, params)}}.dump(2) << "\n";
            break;
        case Format::Csv:
            std::cout << "component,length\n";
            for (auto [name, seq] : {std::pair{"alpha", &t.alpha}, std::pair{"beta", &t.beta}, std::pair{"gamma", &t.gamma}}) {
                for (int x : *seq) {
                    std::cout << name << "," << x << "\n";
                }
            }
            break;
        case Format::Text:
            std::cout << "triple " << t << "\npi " << pi << "\nweight " << weight(t, params) << "\n";
            break;
    }
    return exit_ok;
}

int run_bijection_roundtrip(const BijectionOptions &opts, const Params &params)
{
    if (opts.max_n < 0) {
        throw UsageError("--max-n must be non-negative");
    }
    Count objects = 0;
    std::string failure;
    for (int n = 0; n <= opts.max_n && failure.empty(); ++n) {
        const auto ebar = enumerate(FamilyId::Ebar, params, n);
        const auto bbar = enumerate_dmodular(FamilyId::Bbar, params, n);
        std::vector<DModularOverpartition> image;
        for (const auto &pi : ebar) {
            const auto t = decompose(pi, params);
            const auto mu = insert(t, params);
            if (weight(mu, params) != n || !check_family(mu, FamilyId::Bbar, params)
                || recompose(invert(mu, params), params) != pi) {
                std::ostringstream os;
                os << "forward round trip failed at n=" << n << " for " << pi;
                failure = os.str();
                break;
            }
            image.push_back(mu);
        }
        if (!failure.empty()) {
            break;
        }
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end() || image != bbar) {
            failure = "image of ebar does not equal bbar at n=" + std::to_string(n);
            break;
        }
        for (const auto &mu : bbar) {
            if (insert(invert(mu, params), params) != mu) {
                std::ostringstream os;
                os << "inverse round trip failed at n=" << n << " for " << mu;
                failure = os.str();
                break;
            }
        }
        objects += ebar.size();
    }
    const bool pass = failure.empty();
    switch (opts.common.fmt()) {
        case Format::Json: {
            json out{{"d", params.d()}, {"r", params.r()}, {"max_n", opts.max_n}, {"status", pass ? "pass" : "fail"},
                     {"objects", objects}};
            if (!pass) {
                out["failure"] = failure;
            }
            std::cout << out.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "d,r,max_n,status,objects\n"
                      << params.d() << "," << params.r() << "," << opts.max_n << "," << (pass ? "pass" : "fail")
                      << "," << objects << "\n";
            break;
        case Format::Text:
            std::cout << (pass ? "pass" : "fail") << ": " << objects << " objects up to weight " << opts.max_n << "\n";
            if (!pass) {
                std::cout << failure << "\n";
            }
            break;
    }
    return pass ? exit_ok : exit_failure;
}

int run_bijection(const BijectionOptions &opts)
{
    const auto params = opts.common.params();
    if (opts.direction == "forward") {
        return run_bijection_forward(opts, params);
    }
    if (opts.direction == "inverse") {
        return run_bijection_inverse(opts, params);
    }
    return run_bijection_roundtrip(opts, params);
}

// ---------------------------------------------------------------- construct

struct ConstructOptions {
    CommonOptions common;
    int m = 0;
    std::vector<int> alpha;
    std::vector<int> beta;
    std::vector<int> gamma;
};

int run_construct(const ConstructOptions &opts)
{
    const auto params = opts.common.params();
    BoundedTriple t{opts.m, opts.alpha, opts.beta, opts.gamma};
    if (auto v = bounded_triple_violation(t, params)) {
        return membership_failure("bound violation: " + *v);
    }
    const auto mu = construct(t, params);
    const auto lambda = from_dmodular(mu, params);
    const bool in_cbar = check_family(mu, FamilyId::Cbar, params);
    switch (opts.common.fmt()) {
        case Format::Json:
            std::cout << json{{"triple", t},
                              {"dmodular", mu},
                              {"overpartition", lambda},
                              {"weight", weight(mu, params)},
                              {"parts", mu.parts.size()},
                              {"cbar", in_cbar}}
                             .dump(2)
                      << "\n";
            break;
        case Format::Csv:
            print_dmodular_csv(std::cout, mu);
            break;
        case Format::Text:
            std::cout << "mu ";
            print_dmodular_text(std::cout, mu);
            std::cout << "\nlambda " << lambda << "\nweight " << weight(mu, params) << "\n";
            break;
    }
    return in_cbar ? exit_ok : exit_failure;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Overpartition analogues of Schur's theorem: enumeration, bijection, construction and "
                 "q-series identity checks"};
    app.require_subcommand(1);

    CountOptions count_opts;
    auto *count_cmd = app.add_subcommand("count", "Count family members of each weight 0..max-n");
    add_common(count_cmd, count_opts.common);
    count_cmd->add_option("--family", count_opts.family, "b, e, c, bbar, ebar or cbar")->required();
    count_cmd->add_option("--max-n", count_opts.max_n, "Largest weight")->capture_default_str();

    VerifyCliOptions verify_opts;
    auto *verify_cmd = app.add_subcommand("verify", "Compare both sides of an identity coefficientwise");
    add_common(verify_cmd, verify_opts.common);
    verify_cmd
        ->add_option("--identity", verify_opts.identity,
                     "schur-product, c-g3, bbar-product, cbar-g2, cbar-sum-eq or cbar-bivariate")
        ->required();
    verify_cmd->add_option("--order", verify_opts.order,
                           "Truncation order (default 60 with an enumerated side, else 300)");
    verify_cmd->add_option("--corrupt", verify_opts.corrupt, "Test hook: add 1 to the right side at q^K");

    VerifyCliOptions series_opts;
    auto *series_cmd = app.add_subcommand("series", "Dump the coefficients of an identity's sides");
    add_common(series_cmd, series_opts.common);
    series_cmd->add_option("--identity", series_opts.identity, "Identity name")->required();
    series_cmd->add_option("--order", series_opts.order, "Truncation order");
    series_cmd->add_option("--side", series_opts.side, "lhs, rhs or both")->capture_default_str();

    BijectionOptions bij_opts;
    auto *bij_cmd = app.add_subcommand("bijection", "Run the ebar -> bbar bijection");
    add_common(bij_cmd, bij_opts.common);
    bij_cmd->add_option("direction", bij_opts.direction, "forward, inverse or roundtrip")
        ->required()
        ->check(CLI::IsMember({"forward", "inverse", "roundtrip"}));
    bij_cmd->add_option("--input", bij_opts.input, "JSON literal, @file or - for stdin");
    bij_cmd->add_option("--max-n", bij_opts.max_n, "Largest weight for roundtrip")->capture_default_str();

    ConstructOptions con_opts;
    auto *con_cmd = app.add_subcommand("construct", "Build a cbar overpartition with m parts from a bounded triple");
    add_common(con_cmd, con_opts.common);
    con_cmd->add_option("--m", con_opts.m, "Number of parts")->capture_default_str();
    con_cmd->add_option("--alpha", con_opts.alpha, "Even multiples of d, comma separated")->delimiter(',');
    con_cmd->add_option("--beta", con_opts.beta, "Distinct parts == r mod d, comma separated")->delimiter(',');
    con_cmd->add_option("--gamma", con_opts.gamma, "Distinct parts == d-r mod d, comma separated")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (count_cmd->parsed()) {
            return run_count(count_opts);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_opts);
        }
        if (series_cmd->parsed()) {
            return run_series(series_opts);
        }
        if (bij_cmd->parsed()) {
            return run_bijection(bij_opts);
        }
        if (con_cmd->parsed()) {
            return run_construct(con_opts);
        }
    } catch (const UsageError &e) {
        std::cerr << "overschur: " << e.what() << "\n";
        return exit_usage;
    } catch (const invalid_input_error &e) {
        return membership_failure(e.what());
    } catch (const std::exception &e) {
        std::cerr << "overschur: internal error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}
