#include "cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "liepoisson/group_case.hpp"
#include "liepoisson/io.hpp"
#include "liepoisson/verify.hpp"

namespace liepoisson::cli {

namespace {

/// Input or usage problem; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FactorArgs {
    std::string kind, instance, input = "-", output;
    double tol = 1e-10;
};

struct LeafArgs {
    std::string what, word, zeta, output;
    int n = 0;
};

struct VerifyArgs {
    std::string suite, instance, output;
    int samples = 50;
    std::uint64_t seed = 0;
    double step = 1e-4;
    bool no_timing = false;
    std::vector<std::string> tols;
};

Json read_json(const std::string& path)
{
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f)
            throw UsageError("cannot open input file: " + path);
        buf << f.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

void write_json(const Json& j, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw UsageError("cannot open output file: " + path);
    f << j.dump(2) << "\n";
}

Json permutation_json(const Permutation& p)
{
    Json j = Json::array();
    for (int v : p)
        j.push_back(v);
    return j;
}

double scaled(double tol)
{
    try {
        return tol * tol_scale_from_env();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

int cmd_factor(const FactorArgs& a, std::ostream& out)
{
    SpaceInstance inst = SpaceInstance::group(2);
    Mat g;
    try {
        std::tie(inst, g) = matrix_from_json(read_json(a.input));
        if (!a.instance.empty() && SpaceInstance::parse(a.instance).name() != inst.name())
            throw UsageError("input matrix is " + inst.name() + ", not " + a.instance);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (!g.allFinite())
        throw UsageError("input matrix has non-finite entries");
    const double tol = scaled(a.tol);
    Json j;
    j["instance"] = inst.name();
    double res = 0.0;
    bool has_residual = true;
    if (a.kind == "iwasawa") {
        IwasawaFactors f;
        try {
            f = iwasawa(inst, g);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        j["l"] = matrix_to_json(inst, f.l);
        j["a"] = matrix_to_json(inst, f.a);
        j["u"] = matrix_to_json(inst, f.u);
        j["a0"] = matrix_to_json(inst, f.a0);
        j["a1"] = matrix_to_json(inst, f.a1);
        res = frob(f.l * f.a * f.u - g);
    } else if (a.kind == "birkhoff") {
        BirkhoffFactors f;
        try {
            f = birkhoff(g);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        j["w"] = permutation_json(f.w);
        j["l"] = matrix_to_json(inst, f.l);
        j["m"] = matrix_to_json(inst, f.m);
        j["a"] = matrix_to_json(inst, f.a);
        j["u_plus"] = matrix_to_json(inst, f.u_plus);
        res = frob(f.l * f.m * f.a * f.u_plus - g);
    } else if (a.kind == "bruhat-cell") {
        BruhatCell c;
        try {
            c = bruhat_cell(g);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        j["perm"] = permutation_json(c.perm);
        j["identity"] = c.is_identity();
        j["marginal"] = c.marginal;
        has_residual = false;
    } else {
        if (!in_group(inst, GroupSpace::U, g, tol))
            throw UsageError("cartan-embed needs an element of U");
        const Mat c = cartan_embed(inst, g);
        const BruhatCell layer = layer_of(inst, g);
        j["cartan"] = matrix_to_json(inst, c);
        j["layer"] = {{"perm", permutation_json(layer.perm)}, {"marginal", layer.marginal}};
        res = frob(theta(inst, c) * c - identity(inst));
    }
    bool pass = true;
    if (has_residual) {
        pass = res <= tol;
        j["residual"] = res;
        j["tol"] = tol;
        j["pass"] = pass;
    }
    write_json(j, a.output, out);
    return pass ? 0 : 1;
}

int cmd_leaf(const LeafArgs& a, std::ostream& out)
{
    if (a.n < 2)
        throw UsageError("--n must be at least 2");
    LeafCoordinates c;
    try {
        c.word = word_from_string(a.word);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    for (int letter : c.word)
        if (letter < 1 || letter >= a.n)
            throw UsageError("word letters must lie in 1.." + std::to_string(a.n - 1));
    if (!is_reduced(a.n, c.word))
        throw UsageError("word is not reduced: " + a.word);
    try {
        c.zeta = parse_complex_list(a.zeta);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (c.zeta.size() != c.word.size())
        throw UsageError("--zeta needs one value per letter of --word");

    const RootDatum datum = root_datum(a.n);
    Json j;
    j["n"] = a.n;
    j["word"] = c.word;
    Json zeta = Json::array();
    for (const Complex& z : c.zeta)
        zeta.push_back({z.real(), z.imag()});
    j["zeta"] = zeta;
    if (a.what == "coords") {
        j["l"] = plain_matrix_to_json(lu_coordinates_to_l(datum, c));
    } else if (a.what == "form") {
        j["coeffs"] = lu_form_coefficients(datum, c);
    } else if (a.what == "density") {
        const DensityReport r = density_report(datum, c);
        j["coeffs"] = r.form_coefficients;
        Json diag = Json::array();
        for (Eigen::Index i = 0; i < r.a_value.rows(); ++i)
            diag.push_back(r.a_value(i, i).real());
        j["a"] = diag;
        j["haar"] = r.haar_density;
    } else {
        j["momentum"] = momentum_in_coordinates(datum, c);
    }
    write_json(j, a.output, out);
    return 0;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    Suite suite;
    SpaceInstance inst = SpaceInstance::group(2);
    SuiteOptions options;
    try {
        suite = suite_from_string(a.suite);
        inst = SpaceInstance::parse(a.instance);
        options.tol_scale = tol_scale_from_env();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (a.samples < 0)
        throw UsageError("--samples must be non-negative");
    if (!(a.step >= 1e-6 && a.step <= 1e-3))
        throw UsageError("--step must lie in [1e-6, 1e-3]");
    options.step = a.step;
    options.timing = !a.no_timing;
    for (const auto& t : a.tols) {
        const auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("--tol expects name=value, got " + t);
        try {
            std::size_t used = 0;
            const std::string value = t.substr(eq + 1);
            options.tol_overrides[t.substr(0, eq)] = std::stod(value, &used);
            if (used != value.size())
                throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw UsageError("--tol expects name=value, got " + t);
        }
    }
    const SuiteReport report = run_suite(suite, inst, a.samples, a.seed, options);
    if (report.vacuous)
        err << "warning: zero samples, vacuous pass\n";
    for (const auto& r : report.checks)
        if (!r.pass)
            err << "FAIL " << r.name << ": " << r.max_residual << " > " << r.tol << "\n";
    write_json(Json::parse(report.to_json()), a.output, out);
    return report.pass ? 0 : 1;
}

} // namespace

std::complex<double> parse_complex(const std::string& text)
{
    static const std::string num = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
    static const std::regex real_re("([+-]?" + num + ")");
    static const std::regex imag_re("([+-]?)(" + num + ")?i");
    static const std::regex both_re("([+-]?" + num + ")([+-])(" + num + ")?i");
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    std::smatch m;
    if (std::regex_match(s, m, real_re))
        return {std::stod(m[1]), 0.0};
    if (std::regex_match(s, m, imag_re)) {
        const double mag = m[2].matched ? std::stod(m[2]) : 1.0;
        return {0.0, m[1] == "-" ? -mag : mag};
    }
    if (std::regex_match(s, m, both_re)) {
        const double mag = m[3].matched ? std::stod(m[3]) : 1.0;
        return {std::stod(m[1]), m[2] == "-" ? -mag : mag};
    }
    throw std::invalid_argument("bad complex literal: '" + text + "' (expected a+bi)");
}

std::vector<std::complex<double>> parse_complex_list(const std::string& s)
{
    std::vector<std::complex<double>> out;
    if (s.find_first_not_of(" \t") == std::string::npos)
        return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_complex(item));
    if (!s.empty() && s.back() == ',')
        throw std::invalid_argument("bad complex list: trailing comma");
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Homogeneous Poisson structures on symmetric spaces: factorizations, leaf coordinates, "
                 "verification suites",
                 "liepoisson"};
    app.require_subcommand(1);

    FactorArgs fa;
    auto* factor = app.add_subcommand("factor", "Factor a matrix given in matrix JSON");
    factor->add_option("kind", fa.kind, "iwasawa | birkhoff | bruhat-cell | cartan-embed")
        ->required()
        ->check(CLI::IsMember({"iwasawa", "birkhoff", "bruhat-cell", "cartan-embed"}));
    factor->add_option("--instance", fa.instance, "grass:p,q or group:n; must match the input");
    factor->add_option("--input", fa.input, "matrix JSON file, - for stdin");
    factor->add_option("--output", fa.output, "write JSON here instead of stdout");
    factor->add_option("--tol", fa.tol, "reconstruction tolerance");

    LeafArgs la;
    auto* leaf = app.add_subcommand("leaf", "Lu coordinates on a leaf of SU(n)");
    leaf->add_option("what", la.what, "coords | form | density | momentum")
        ->required()
        ->check(CLI::IsMember({"coords", "form", "density", "momentum"}));
    leaf->add_option("--n", la.n, "rank + 1")->required();
    leaf->add_option("--word", la.word, "reduced word, e.g. \"1 2 1\"");
    leaf->add_option("--zeta", la.zeta, "comma-separated a+bi values, one per letter");
    leaf->add_option("--output", la.output, "write JSON here instead of stdout");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", va.suite, "core | factorization | hamiltonian | noncompact | compact | iso | group | all")
        ->required();
    verify->add_option("--instance", va.instance, "grass:p,q or group:n")->required();
    verify->add_option("--samples", va.samples, "samples per check");
    verify->add_option("--seed", va.seed, "base seed")->required();
    verify->add_option("--step", va.step, "finite-difference step");
    verify->add_flag("--no-timing", va.no_timing, "report seconds = 0");
    verify->add_option("--tol", va.tols, "tolerance override name=value")->take_all();
    verify->add_option("--output", va.output, "write JSON here instead of stdout");

    std::vector<std::string> argv_store = {"liepoisson"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*factor)
            return cmd_factor(fa, out);
        if (*leaf)
            return cmd_leaf(la, out);
        return cmd_verify(va, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace liepoisson::cli
