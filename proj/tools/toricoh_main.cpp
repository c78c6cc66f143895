// toricoh: command-line driver over the cohomology engine.
#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "toricoh/formats.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw toricoh::InvalidInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream out;
    for (unsigned i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return out.str();
}

toricoh::Json parse_json(const std::string& text, const std::string& path) {
    try {
        return toricoh::Json::parse(text);
    } catch (const toricoh::Json::parse_error& e) {
        throw toricoh::InvalidInput(path + ": " + e.what());
    }
}

std::vector<long> parse_delta(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw toricoh::InvalidInput("--delta: '" + item + "' is not an integer");
        out.push_back(v);
    }
    return out;  // empty: the trivial class group
}

void describe(const std::exception& e) {
    std::cerr << "toricoh: " << e.what() << "\n";
    if (const auto* f = dynamic_cast<const toricoh::FinitenessViolation*>(&e)) {
        std::cerr << "  offending I = " << toricoh::Json(f->set().one_based()).dump()
                  << "\n  certificate (nonzero vector of M in C_I) = " << toricoh::Json(f->certificate()).dump() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local and toric sheaf cohomology with monomial supports"};
    app.set_version_flag("--version", toricoh::library_version());

    std::string operation;
    std::string input;
    std::optional<int> i;
    std::optional<std::string> delta;
    std::optional<long> ell;
    std::optional<long> characteristic;
    std::string module_path;
    std::string out_path;
    bool verify = false, profile = false, local = false, inject = false;

    app.add_option("operation", operation, "sigma | cohom | bound | finiteness | oracle-check")
        ->required()
        ->check(CLI::IsMember({"sigma", "cohom", "bound", "finiteness", "oracle-check"}));
    app.add_option("input", input, "input JSON document")->required();
    app.add_option("--i", i, "cohomological degree");
    app.add_option("--delta", delta, "coarse degree a,b,... in the reported basis; '' when D = 0")->allow_extra_args(false);
    app.add_option("--ell", ell, "Frobenius exponent for the truncated dimension");
    app.add_option("--char", characteristic, "field characteristic (0 or a prime)");
    app.add_flag("--verify", verify, "cross-check the dual Sigma table against the direct one");
    app.add_option("--module", module_path, "module JSON document");
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_flag("--profile", profile, "cohom: truncated dimensions for l = 0..bound");
    app.add_flag("--local", local, "use local cohomology indexing for fan inputs");
    app.add_flag("--inject-fault", inject, "corrupt the dual table before --verify (testing)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const std::string text = read_file(input);
        const toricoh::InputDocument doc = toricoh::parse_input(parse_json(text, input));

        toricoh::CommandOptions opts;
        opts.i = i;
        if (delta) opts.delta = parse_delta(*delta);
        opts.ell = ell;
        opts.characteristic = characteristic;
        opts.verify = verify;
        opts.profile = profile;
        opts.force_local = local;
        opts.inject_fault = inject;
        std::string module_text;
        if (!module_path.empty()) {
            module_text = read_file(module_path);
            opts.module = toricoh::parse_module(parse_json(module_text, module_path));
        }

        toricoh::Json report = toricoh::run_command(operation, doc, opts);
        report["input_digest"] = "sha256:" + sha256_hex(text);
        if (!module_path.empty()) report["module_digest"] = "sha256:" + sha256_hex(module_text);

        const std::string body = toricoh::dump_report(report);
        if (out_path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw toricoh::InvalidInput("cannot write " + out_path);
            out << body;
        }

        const auto& results = report["results"];
        if (operation == "finiteness" && !results["all_finite"].get<bool>()) {
            std::cerr << "toricoh: finiteness fails for a set in a Sigma table\n";
            return 3;
        }
        if (operation == "oracle-check" && !results["all_passed"].get<bool>()) {
            for (const auto& c : results["checks"])
                if (!c["passed"].get<bool>()) std::cerr << "toricoh: oracle check failed: " << c["name"].get<std::string>() << "\n";
            return 4;
        }
        return 0;
    } catch (const std::exception& e) {
        describe(e);
        return toricoh::exit_code_for(e);
    }
}
