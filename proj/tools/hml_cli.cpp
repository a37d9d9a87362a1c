// hml: command-line front end over the homeology C API.
//
// Exit codes: 0 success, 1 property failure, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "homeology/homeology.h"

namespace {

using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;

struct Failure {
    int code;
    std::string message;
};

struct ComplexDeleter {
    void operator()(hml_complex* k) const { hml_complex_free(k); }
};
using Complex = std::unique_ptr<hml_complex, ComplexDeleter>;

int exit_code(hml_status s) {
    if (s == HML_OK) return kOk;
    if (s == HML_ERR_INTERNAL) return kPropertyFailure;
    return kInputError;
}

void check_status(hml_status s, const std::string& context) {
    if (s == HML_OK) return;
    std::string msg = context.empty() ? "" : context + ": ";
    msg += std::string(hml_status_name(s)) + ": " + hml_last_error();
    throw Failure{exit_code(s), msg};
}

std::string take(char* s) {
    std::string out = s ? s : "";
    hml_string_free(s);
    return out;
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kInputError, path + ": cannot open file"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Complex load_complex(const std::string& path, long budget) {
    hml_complex* k = nullptr;
    check_status(hml_complex_from_json(read_text(path).c_str(), &k), path);
    Complex out(k);
    if (budget > 0 && hml_complex_num_faces(k) > budget) {
        throw Failure{kInputError, path + ": " + std::to_string(hml_complex_num_faces(k)) +
                                       " faces exceed the budget of " + std::to_string(budget)};
    }
    return out;
}

std::string complex_json(const hml_complex* k) {
    char* out = nullptr;
    check_status(hml_complex_to_json(k, &out), "");
    return take(out);
}

// "a,b,c" -> ["a","b","c"]
std::string simplex_arg(const std::string& text) {
    json arr = json::array();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw Failure{kInputError, "--simplex: empty vertex label in '" + text + "'"};
        arr.push_back(item);
    }
    if (arr.empty()) throw Failure{kInputError, "--simplex needs at least one vertex"};
    return arr.dump();
}

struct Options {
    std::string coeffs = "z";
    bool reduced = false;
    bool homological = false;
    int page = 2;
    std::optional<std::uint64_t> seed;
    int count = 5;
    std::string format = "json";
    long budget = 0;

    hml_format fmt() const { return format == "markdown" ? HML_FORMAT_MARKDOWN : HML_FORMAT_JSON; }
    std::uint64_t need_seed(const char* command) const {
        if (!seed) throw Failure{kInputError, std::string(command) + " is randomized and needs --seed"};
        return *seed;
    }
};

std::string report_markdown(const json& r) {
    std::ostringstream os;
    os << (r.value("pass", false) ? "PASS" : "FAIL") << ' ' << r.value("check", std::string("invariance")) << '\n';
    if (r.contains("lhs")) os << "\n- computed: " << r["lhs"].get<std::string>() << "\n- expected: " << r["rhs"].get<std::string>() << '\n';
    if (r.contains("notes")) {
        for (const auto& n : r["notes"]) os << "- " << n.get<std::string>() << '\n';
    }
    if (r.contains("log")) {
        for (const auto& n : r["log"]) os << "- " << n.get<std::string>() << '\n';
    }
    if (r.contains("failure")) os << "\nfirst mismatch: " << r["failure"].get<std::string>() << '\n';
    return os.str();
}

int print_report(const std::string& text, int passed, const Options& o) {
    if (o.fmt() == HML_FORMAT_MARKDOWN) {
        std::cout << report_markdown(json::parse(text));
    } else {
        std::cout << text;
    }
    return passed ? kOk : kPropertyFailure;
}

void add_common(CLI::App* c, Options& o, bool tables) {
    c->add_option("--coeffs", o.coeffs, "coefficients: z, q or zp:<prime>");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "markdown"}));
    c->add_option("--budget", o.budget, "maximum number of faces");
    if (tables) {
        c->add_flag("--reduced", o.reduced, "include the empty simplex");
        c->add_flag("--homological", o.homological, "use the homological filtration");
        c->add_option("--page", o.page, "spectral sequence page");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simplicial (co)homeology spectral sequences"};
    app.require_subcommand(1);
    Options o;
    std::vector<std::string> files;
    std::string what;
    std::string simplex;
    std::string label;
    std::string map_path;

    auto* compute = app.add_subcommand("compute", "compute a table or graded group");
    compute->add_option("what", what, "homology, cohomology, homeology, cohomeology, page, e-infinity, total, links")
        ->required()
        ->check(CLI::IsMember({"homology", "cohomology", "homeology", "cohomeology", "page", "e-infinity", "total", "links"}));
    compute->add_option("complex", files, "complex JSON")->required()->expected(1);
    add_common(compute, o, true);

    auto* verify = app.add_subcommand("verify-invariance", "tables under seeded random stellar subdivisions");
    verify->add_option("complex", files, "complex JSON")->required()->expected(1);
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--count", o.count, "number of subdivisions");
    add_common(verify, o, false);

    auto* check = app.add_subcommand("check", "structural identities");
    check->add_option("check", what, "euler, components, kunneth-join, kunneth-product, glue")
        ->required()
        ->check(CLI::IsMember({"euler", "components", "kunneth-join", "kunneth-product", "glue"}));
    check->add_option("complexes", files, "one or two complex JSON files")->required()->expected(1, 2);
    check->add_option("--map", map_path, "identification map JSON for glue (L label -> K label)");
    add_common(check, o, false);

    auto* subdivide = app.add_subcommand("subdivide", "stellar subdivision");
    subdivide->add_option("complex", files, "complex JSON")->required()->expected(1);
    subdivide->add_option("--simplex", simplex, "comma-separated vertex labels");
    subdivide->add_option("--label", label, "label of the new vertex");
    subdivide->add_option("--seed", o.seed, "random seed, for --count random subdivisions");
    subdivide->add_option("--count", o.count, "number of random subdivisions");
    add_common(subdivide, o, false);

    auto* product = app.add_subcommand("product", "triangulated product");
    product->add_option("complexes", files, "two complex JSON files")->required()->expected(2);
    auto* join = app.add_subcommand("join", "join of two complexes");
    join->add_option("complexes", files, "two complex JSON files")->required()->expected(2);
    auto* glue = app.add_subcommand("glue", "union along identified vertices");
    glue->add_option("complexes", files, "two complex JSON files")->required()->expected(2);
    glue->add_option("--map", map_path, "identification map JSON (L label -> K label)")->required();

    auto* random = app.add_subcommand("random", "random complex");
    int vertices = 6;
    int dim = 2;
    double density = 0.3;
    random->add_option("--vertices", vertices, "number of vertices");
    random->add_option("--dim", dim, "facet dimension");
    random->add_option("--density", density, "facet probability");
    random->add_option("--seed", o.seed, "random seed");

    auto* induced = app.add_subcommand("induced", "maps induced on page 2 by a simplicial map");
    induced->add_option("files", files, "source, target, map JSON")->required()->expected(3);
    add_common(induced, o, true);

    auto* blocks = app.add_subcommand("blocks", "block complexes");
    blocks->require_subcommand(1);
    auto* bvalidate = blocks->add_subcommand("validate", "validate a block file");
    bvalidate->add_option("files", files, "complex JSON and block JSON")->required()->expected(2);
    add_common(bvalidate, o, false);
    auto* bcompute = blocks->add_subcommand("compute", "tables of a block complex");
    bcompute->add_option("files", files, "complex JSON and block JSON")->required()->expected(2);
    bcompute->add_option("--what", what, "cohomeology, homeology or chain")
        ->check(CLI::IsMember({"cohomeology", "homeology", "chain"}));
    add_common(bcompute, o, true);
    auto* bproduct = blocks->add_subcommand("product", "product block complex");
    bproduct->add_option("files", files, "two complex JSON files")->required()->expected(2);
    auto* bsubdivide = blocks->add_subcommand("subdivide", "subdivision block complex");
    bsubdivide->add_option("complex", files, "complex JSON")->required()->expected(1);
    bsubdivide->add_option("--simplex", simplex, "comma-separated vertex labels")->required();
    bsubdivide->add_option("--label", label, "label of the new vertex");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (compute->parsed()) {
            const Complex k = load_complex(files[0], o.budget);
            char* out = nullptr;
            check_status(hml_compute(k.get(), what.c_str(), o.coeffs.c_str(), o.reduced, o.homological, o.page, o.fmt(), &out),
                         files[0]);
            std::cout << take(out);
            return kOk;
        }
        if (verify->parsed()) {
            const std::uint64_t seed = o.need_seed("verify-invariance");
            const Complex k = load_complex(files[0], 0);
            char* out = nullptr;
            int passed = 0;
            check_status(hml_verify_invariance(k.get(), o.count, seed, o.coeffs.c_str(), o.budget > 0 ? o.budget : 4000,
                                               &out, &passed),
                         files[0]);
            return print_report(take(out), passed, o);
        }
        if (check->parsed()) {
            const Complex a = load_complex(files[0], 0);
            const Complex b = files.size() > 1 ? load_complex(files[1], 0) : Complex{};
            const std::string map_text = map_path.empty() ? "" : read_text(map_path);
            char* out = nullptr;
            int passed = 0;
            check_status(hml_check(what.c_str(), a.get(), b.get(), map_path.empty() ? nullptr : map_text.c_str(),
                                   o.budget > 0 ? o.budget : 64, &out, &passed),
                         what);
            return print_report(take(out), passed, o);
        }
        if (subdivide->parsed()) {
            const Complex k = load_complex(files[0], o.budget);
            hml_complex* out = nullptr;
            if (!simplex.empty()) {
                check_status(hml_subdivide(k.get(), simplex_arg(simplex).c_str(), label.empty() ? nullptr : label.c_str(), &out),
                             files[0]);
            } else {
                check_status(hml_subdivide_random(k.get(), o.count, o.need_seed("random subdivision"), &out), files[0]);
            }
            const Complex r(out);
            std::cout << complex_json(r.get());
            return kOk;
        }
        if (product->parsed() || join->parsed() || glue->parsed()) {
            const Complex a = load_complex(files[0], 0);
            const Complex b = load_complex(files[1], 0);
            hml_complex* out = nullptr;
            if (product->parsed()) check_status(hml_product(a.get(), b.get(), &out), "product");
            if (join->parsed()) check_status(hml_join(a.get(), b.get(), &out), "join");
            if (glue->parsed()) check_status(hml_glue(a.get(), b.get(), read_text(map_path).c_str(), &out), map_path);
            const Complex r(out);
            std::cout << complex_json(r.get());
            return kOk;
        }
        if (random->parsed()) {
            hml_complex* out = nullptr;
            check_status(hml_complex_random(vertices, dim, density, o.need_seed("random"), &out), "random");
            const Complex r(out);
            std::cout << complex_json(r.get());
            return kOk;
        }
        if (induced->parsed()) {
            const Complex a = load_complex(files[0], 0);
            const Complex b = load_complex(files[1], 0);
            char* out = nullptr;
            check_status(hml_induced(a.get(), b.get(), read_text(files[2]).c_str(), o.coeffs.c_str(), o.reduced,
                                     o.homological, &out),
                         files[2]);
            std::cout << take(out);
            return kOk;
        }
        if (bvalidate->parsed()) {
            const Complex k = load_complex(files[0], o.budget);
            char* out = nullptr;
            const hml_status s = hml_blocks_validate(k.get(), read_text(files[1]).c_str(), &out);
            if (s == HML_OK) {
                std::cout << take(out);
                return kOk;
            }
            if (s == HML_ERR_PARSE || s == HML_ERR_INVALID_INPUT || s == HML_ERR_NULL_ARGUMENT) check_status(s, files[1]);
            // The file is well formed but is not a block complex.
            json r{{"valid", false}, {"violation", hml_status_name(s)}, {"message", hml_last_error()}};
            std::cout << (o.fmt() == HML_FORMAT_MARKDOWN ? "INVALID " + std::string(hml_status_name(s)) + ": " + hml_last_error() + "\n"
                                                         : r.dump(2) + "\n");
            return kPropertyFailure;
        }
        if (bcompute->parsed()) {
            const Complex k = load_complex(files[0], o.budget);
            char* out = nullptr;
            const std::string w = what.empty() ? "cohomeology" : what;
            check_status(hml_blocks_compute(k.get(), read_text(files[1]).c_str(), w.c_str(), o.coeffs.c_str(), o.reduced,
                                            o.fmt(), &out),
                         files[1]);
            std::cout << take(out);
            return kOk;
        }
        if (bproduct->parsed()) {
            const Complex a = load_complex(files[0], 0);
            const Complex b = load_complex(files[1], 0);
            char* out = nullptr;
            check_status(hml_blocks_product(a.get(), b.get(), &out), "blocks product");
            std::cout << take(out);
            return kOk;
        }
        if (bsubdivide->parsed()) {
            const Complex k = load_complex(files[0], 0);
            char* out = nullptr;
            check_status(hml_blocks_subdivision(k.get(), simplex_arg(simplex).c_str(), label.empty() ? nullptr : label.c_str(),
                                                &out),
                         files[0]);
            std::cout << take(out);
            return kOk;
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
