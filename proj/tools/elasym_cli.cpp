// elasym: classify and analyze 3D elasticity tensors through polynomial
// covariants. See README.md for the file formats and the JSON schema.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "elasym/binary_form.hpp"
#include "elasym/elasticity.hpp"
#include "elasym/h4.hpp"
#include "elasym/h4_classify.hpp"
#include "elasym/verify.hpp"

using nlohmann::json;
using namespace elasym;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;

struct CliError {
    int code;
    std::string message;
};

double default_tol() {
    if (const char* env = std::getenv("ELASYM_TOL")) {
        try {
            double v = std::stod(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return 1e-8;
}

Matrix6d matrix_from_json(const json& rows) {
    if (!rows.is_array() || rows.size() != 6) throw CliError{kExitParse, "matrix must be 6x6"};
    Matrix6d m;
    for (int i = 0; i < 6; ++i) {
        if (!rows[i].is_array() || rows[i].size() != 6)
            throw CliError{kExitParse, "matrix must be 6x6"};
        for (int j = 0; j < 6; ++j) m(i, j) = rows[i][j].get<double>();
    }
    return m;
}

ElasticityTensor tensor_from_matrix(const Matrix6d& m, const std::string& format) {
    double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw CliError{kExitValidation, "input matrix is not symmetric within 1e-10"};
    Matrix6d sym = 0.5 * (m + m.transpose());
    if (format == "voigt") return ElasticityTensor::from_voigt(sym);
    if (format == "kelvin") return ElasticityTensor::from_kelvin(sym);
    throw CliError{kExitValidation, "unknown format: " + format};
}

// JSON document {"format": ..., "matrix": [[...]]} or {"format":
// "components21", "components": [...]}; plain-text fallback: 36 whitespace-
// separated numbers forming the 6x6 matrix, or 21 numbers for components21.
ElasticityTensor load_input(const std::string& path, std::string format) {
    std::ifstream in(path);
    if (!in) throw CliError{kExitParse, "cannot read input file: " + path};
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    json doc = json::parse(text, nullptr, false);
    if (!doc.is_discarded()) {
        if (!doc.is_object()) throw CliError{kExitParse, "JSON input must be an object"};
        if (doc.contains("format")) format = doc["format"].get<std::string>();
        if (format == "components21") {
            if (!doc.contains("components") || !doc["components"].is_array() ||
                doc["components"].size() != 21)
                throw CliError{kExitParse, "components21 input needs a 21-entry \"components\" array"};
            std::array<double, 21> c{};
            for (int i = 0; i < 21; ++i) c[i] = doc["components"][i].get<double>();
            return ElasticityTensor::from_components21(c);
        }
        if (!doc.contains("matrix")) throw CliError{kExitParse, "JSON input needs a \"matrix\" field"};
        return tensor_from_matrix(matrix_from_json(doc["matrix"]), format);
    }

    std::istringstream nums(text);
    std::vector<double> vals;
    double v;
    while (nums >> v) vals.push_back(v);
    if (format == "components21") {
        if (vals.size() != 21)
            throw CliError{kExitParse, "components21 input needs exactly 21 numbers"};
        std::array<double, 21> c{};
        std::copy(vals.begin(), vals.end(), c.begin());
        return ElasticityTensor::from_components21(c);
    }
    if (vals.size() != 36)
        throw CliError{kExitParse, "plain-text input needs exactly 36 numbers (6x6)"};
    Matrix6d m;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m(i, j) = vals[6 * i + j];
    return tensor_from_matrix(m, format);
}

// The harmonic part of a nearly isotropic input is roundoff-sized; snap it
// to zero so downstream harmonicity gates see a clean tensor.
SymTensor harmonic_or_zero(const HarmonicDecomposition& dec, double input_norm) {
    if (norm(dec.H) <= 1e-12 * std::max(input_norm, 1e-300)) return SymTensor(4);
    return dec.H;
}

json matrix_to_json(const Matrix6d& m) {
    json rows = json::array();
    for (int i = 0; i < 6; ++i) {
        json row = json::array();
        for (int j = 0; j < 6; ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

json mat3_to_json(const Eigen::Matrix3d& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

int cmd_classify(const std::string& input, const std::string& format, double tol, bool as_json) {
    ElasticityTensor e = load_input(input, format);
    ClassificationLedger led;
    H4Class cls = classify_elasticity(e, tol, &led);
    HarmonicDecomposition dec = decompose(e);
    SymTensor h = harmonic_or_zero(dec, e.norm());
    H4Class hcls = norm(h) > 0 ? classify_h4((1.0 / norm(h)) * h, tol) : H4Class::isotropic;

    if (as_json) {
        json out;
        out["schema"] = 1;
        out["command"] = "classify";
        out["class"] = to_string(cls);
        out["tol"] = tol;
        json rows = json::array();
        for (const auto& r : led.rows)
            rows.push_back({{"condition", r.condition},
                            {"residual", r.residual},
                            {"threshold", r.threshold},
                            {"vanishes", r.vanishes}});
        out["ledger"] = rows;
        json fams = json::array();
        for (const auto& f : led.families) fams.push_back({{"family", f.first}, {"class", f.second}});
        out["families"] = fams;
        out["decomposition"] = {{"lambda", dec.lambda}, {"mu", dec.mu},
                                {"norm_a", dec.a.norm()}, {"norm_b", dec.b.norm()},
                                {"norm_H", norm(dec.H)}, {"h_class", to_string(hcls)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "class: " << to_string(cls) << "\n";
    std::cout << "tolerance: " << tol << "\n\n";
    std::cout << "vanishing tests (residual / threshold):\n";
    for (const auto& r : led.rows)
        std::printf("  %-46s %12.4e / %8.1e  %s\n", r.condition.c_str(), r.residual, r.threshold,
                    r.vanishes ? "= 0" : "!= 0");
    for (const auto& f : led.families)
        std::printf("  family %-39s %s\n", f.first.c_str(), f.second.c_str());
    std::printf("\ndecomposition: lambda = %.6g, mu = %.6g, |a| = %.4g, |b| = %.4g, |H| = %.4g\n",
                dec.lambda, dec.mu, dec.a.norm(), dec.b.norm(), norm(dec.H));
    std::printf("harmonic part alone: %s\n", to_string(hcls));
    return 0;
}

int cmd_decompose(const std::string& input, const std::string& format, bool as_json) {
    ElasticityTensor e = load_input(input, format);
    HarmonicDecomposition dec = decompose(e);
    ElasticityTensor h_embed = reconstruct(0, 0, Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero(),
                                           harmonic_or_zero(dec, e.norm()));
    if (as_json) {
        json out;
        out["schema"] = 1;
        out["command"] = "decompose";
        out["lambda"] = dec.lambda;
        out["mu"] = dec.mu;
        out["a"] = mat3_to_json(dec.a);
        out["b"] = mat3_to_json(dec.b);
        out["d_prime"] = mat3_to_json(dec.dilatation_dev());
        out["v_prime"] = mat3_to_json(dec.voigt_dev());
        out["H_voigt"] = matrix_to_json(h_embed.voigt());
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::printf("lambda = %.12g\nmu     = %.12g\n", dec.lambda, dec.mu);
    std::cout << "a =\n" << dec.a << "\nb =\n" << dec.b << "\n";
    std::cout << "H (Voigt view of the harmonic part) =\n" << h_embed.voigt() << "\n";
    return 0;
}

int cmd_invariants(const std::string& input, const std::string& format, const std::string& basis,
                   bool as_json) {
    ElasticityTensor e = load_input(input, format);
    if (basis == "boehler") {
        HarmonicDecomposition dec = decompose(e);
        SymTensor h = harmonic_or_zero(dec, e.norm());
        BoehlerSet bo = boehler(HarmTensor{h, 1e-6});
        double J2 = bo.Jk(2);
        json rel = {{"3 J4 - J2^2", 3 * bo.Jk(4) - J2 * J2},
                    {"30 J3^2 - J2^3", 30 * bo.Jk(3) * bo.Jk(3) - J2 * J2 * J2},
                    {"9 J6 - J2^3", 9 * bo.Jk(6) - J2 * J2 * J2}};
        if (as_json) {
            json out;
            out["schema"] = 1;
            out["command"] = "invariants";
            out["basis"] = "boehler";
            json jk;
            for (int k = 2; k <= 10; ++k) jk["J" + std::to_string(k)] = bo.Jk(k);
            out["J"] = jk;
            out["cubic_relations"] = rel;
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        for (int k = 2; k <= 10; ++k) std::printf("J%-2d = %.12g\n", k, bo.Jk(k));
        std::printf("cubic relations: 3J4-J2^2 = %.3e, 30J3^2-J2^3 = %.3e, 9J6-J2^3 = %.3e\n",
                    3 * bo.Jk(4) - J2 * J2, 30 * bo.Jk(3) * bo.Jk(3) - J2 * J2 * J2,
                    9 * bo.Jk(6) - J2 * J2 * J2);
        return 0;
    }
    if (basis != "full297") throw CliError{kExitValidation, "unknown basis: " + basis};
    auto entries = integrity_basis(e);
    if (as_json) {
        json out;
        out["schema"] = 1;
        out["command"] = "invariants";
        out["basis"] = "full297";
        json arr = json::array();
        for (const auto& en : entries)
            arr.push_back({{"label", en.label},
                           {"mdeg", {en.deg_h, en.deg_a, en.deg_b}},
                           {"value", en.value}});
        out["entries"] = arr;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& en : entries)
        std::printf("%-10s (H^%d a^%d b^%d)  %.12g\n", en.label.c_str(), en.deg_h, en.deg_a,
                    en.deg_b, en.value);
    std::printf("%zu entries\n", entries.size());
    return 0;
}

int cmd_covariants(const std::string& input, const std::string& format, bool as_json) {
    ElasticityTensor e = load_input(input, format);
    HarmonicDecomposition dec = decompose(e);
    SymTensor h = harmonic_or_zero(dec, e.norm());
    auto entries = eval_basis(HarmTensor{h, 1e-6});
    if (as_json) {
        json out;
        out["schema"] = 1;
        out["command"] = "covariants";
        json arr = json::array();
        for (const auto& en : entries)
            arr.push_back({{"id", en.id}, {"degree", en.degree}, {"order", en.order},
                           {"norm", norm(en.value)}});
        out["entries"] = arr;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::printf("%-18s %6s %6s %14s\n", "id", "deg", "ord", "norm");
    for (const auto& en : entries)
        std::printf("%-18s %6d %6d %14.6e\n", en.id.c_str(), en.degree, en.order, norm(en.value));
    return 0;
}

int cmd_gen(const std::string& cls_name, std::uint64_t seed, bool rotated,
            const std::string& out_path, bool as_json) {
    auto cls = parse_h4_class(cls_name);
    if (!cls) throw CliError{kExitValidation, "unknown class: " + cls_name};
    ElasticityTensor e = generate_elasticity(*cls, seed, rotated);
    json out;
    out["schema"] = 1;
    out["format"] = "voigt";
    out["class"] = to_string(*cls);
    out["seed"] = seed;
    out["rotated"] = rotated;
    out["matrix"] = matrix_to_json(e.voigt());
    std::ofstream f(out_path);
    if (!f) throw CliError{kExitParse, "cannot write output file: " + out_path};
    f << out.dump(2) << "\n";
    if (!f) throw CliError{kExitParse, "write failure: " + out_path};
    if (as_json)
        std::cout << json{{"schema", 1}, {"command", "gen"}, {"class", to_string(*cls)},
                          {"seed", seed}, {"rotated", rotated}, {"out", out_path}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "wrote " << to_string(*cls) << " fixture (seed " << seed << ") to "
                  << out_path << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, bool as_json) {
    std::vector<verify::Suite> suites;
    try {
        suites = verify::run_suites(suite);
    } catch (const std::invalid_argument& ex) {
        throw CliError{kExitValidation, ex.what()};
    }
    bool all_pass = true;
    if (as_json) {
        json out;
        out["schema"] = 1;
        out["command"] = "verify";
        json arr = json::array();
        for (const auto& s : suites) {
            json checks = json::array();
            for (const auto& c : s.checks) {
                checks.push_back({{"name", c.name}, {"residual", c.residual},
                                  {"threshold", c.threshold}, {"pass", c.pass}});
                all_pass &= c.pass;
            }
            arr.push_back({{"suite", s.name}, {"pass", s.pass()}, {"checks", checks}});
        }
        out["suites"] = arr;
        out["pass"] = all_pass;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& s : suites) {
            std::printf("suite %s\n", s.name.c_str());
            for (const auto& c : s.checks) {
                std::printf("  %-52s %12.4e / %8.1e  %s\n", c.name.c_str(), c.residual,
                            c.threshold, c.pass ? "ok" : "FAIL");
                all_pass &= c.pass;
            }
        }
        std::printf("%s\n", all_pass ? "all suites passed" : "FAILURES detected");
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetry-class analysis of 3D elasticity tensors via polynomial covariants"};
    app.require_subcommand(1);

    std::string input, format = "voigt", out_path, basis = "boehler", suite = "all", cls_name;
    double tol = default_tol();
    bool as_json = false, rotated = true;
    std::uint64_t seed = 0;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", input, "input file (JSON or whitespace 6x6)")->required();
        sub->add_option("--format", format,
                        "voigt|kelvin|components21; Voigt order (11,22,33,23,13,12), "
                        "Kelvin = P V P with P = diag(1,1,1,sqrt2,sqrt2,sqrt2), "
                        "components21 = Voigt upper triangle row-major");
        sub->add_flag("--json", as_json, "emit JSON");
    };

    CLI::App* classify = app.add_subcommand("classify", "decide the symmetry class");
    add_input(classify);
    classify->add_option("--tol", tol, "vanishing tolerance (default 1e-8 or ELASYM_TOL)");

    CLI::App* dec = app.add_subcommand("decompose", "harmonic decomposition (lambda, mu, a, b, H)");
    add_input(dec);

    CLI::App* inv = app.add_subcommand("invariants", "invariant values");
    add_input(inv);
    inv->add_option("--basis", basis, "boehler|full297");

    CLI::App* cov = app.add_subcommand("covariants", "the 70 covariant-basis entries of H");
    add_input(cov);

    CLI::App* gen = app.add_subcommand("gen", "generate a class fixture");
    gen->add_option("--class", cls_name, "target symmetry class")->required();
    gen->add_option("--seed", seed, "random seed")->required();
    gen->add_flag("--rotate,!--no-rotate", rotated, "conjugate by a random rotation (default on)");
    gen->add_option("--out", out_path, "output path")->required();
    gen->add_flag("--json", as_json, "emit JSON");

    CLI::App* ver = app.add_subcommand("verify", "run the property suites");
    ver->add_option("--suite", suite, "core|covariants|bridge|all");
    ver->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (*classify) return cmd_classify(input, format, tol, as_json);
        if (*dec) return cmd_decompose(input, format, as_json);
        if (*inv) return cmd_invariants(input, format, basis, as_json);
        if (*cov) return cmd_covariants(input, format, as_json);
        if (*gen) return cmd_gen(cls_name, seed, rotated, out_path, as_json);
        if (*ver) return cmd_verify(suite, as_json);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
