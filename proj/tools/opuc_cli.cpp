// Command-line front end: extraction, construction, verification suites, and
// plot-data export for the two-jump counterexample pipeline.
//
// Exit codes: 0 success / all criteria pass, 1 criterion or stage failure,
// 2 usage, validation, or environment error.
#include <fcntl.h>
#include <openssl/evp.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opuc/fh.hpp"
#include "opuc/json_io.hpp"
#include "opuc/moments.hpp"
#include "opuc/special.hpp"
#include "opuc/steklov.hpp"
#include "opuc/verify.hpp"
#include "opuc/version.hpp"

namespace fs = std::filesystem;
using opuc::json;

namespace {

struct RunConfig {
    double epsilon = 0.1;
    int n = 64;
    std::vector<int> n_list;
    std::size_t m = 65536;
    std::string precision = "standard";
    std::string out_dir = "out";
    std::uint64_t seed = 42;
    bool large = false;

    void validate() const {
        if (!(epsilon > 0.0) || epsilon > 0.3)
            throw std::invalid_argument("epsilon must lie in (0, 0.3]");
        if (m == 0 || m % 4 != 0) throw std::invalid_argument("grid size must be a positive multiple of 4");
        if (n < 1) throw std::invalid_argument("n must be >= 1");
        if (precision != "standard" && precision != "high")
            throw std::invalid_argument("precision must be 'standard' or 'high'");
    }

    opuc::Precision prec() const {
        return precision == "high" ? opuc::Precision::high : opuc::Precision::standard;
    }
};

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string eps_tag(double eps) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", eps);
    return buf;
}

// One command at a time per out_dir.
class OutDirLock {
  public:
    explicit OutDirLock(const fs::path& dir) : path_(dir / ".opuc_lock") {
        fs::create_directories(dir);
        fd_ = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
        if (fd_ < 0)
            throw std::invalid_argument("out_dir is locked by another run (" + path_.string() +
                                        "); remove the lock file if that run crashed");
        const std::string pid = std::to_string(::getpid()) + "\n";
        [[maybe_unused]] auto n = ::write(fd_, pid.data(), pid.size());
    }
    ~OutDirLock() {
        if (fd_ >= 0) {
            ::close(fd_);
            ::unlink(path_.c_str());
        }
    }
    OutDirLock(const OutDirLock&) = delete;
    OutDirLock& operator=(const OutDirLock&) = delete;

  private:
    fs::path path_;
    int fd_ = -1;
};

fs::path cache_dir(const RunConfig& cfg) {
    if (const char* env = std::getenv("OPUC_CACHE_DIR")) return fs::path(env);
    return fs::path(cfg.out_dir) / "cache";
}

std::string canonical_extract_key(double eps, std::size_t N, const std::string& precision) {
    return std::string("code=") + opuc::kVersion + ";kind=fh_gamma;eps=" +
           opuc::format_double(eps) + ";N=" + std::to_string(N) + ";precision=" + precision;
}

void write_file(const fs::path& p, const std::string& content) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << content;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ExtractOutcome {
    fs::path file;
    bool cache_hit = false;
    std::string content;
};

// Extraction with the (epsilon, N, precision) cache. The serialized JSON is
// the cache payload, so a hit reproduces the output byte a byte.
ExtractOutcome run_extraction(const RunConfig& cfg, std::size_t N) {
    const std::string key_src = canonical_extract_key(cfg.epsilon, N, cfg.precision);
    const std::string key = sha256_hex(key_src);
    const fs::path cpath = cache_dir(cfg) / (key + ".json");
    const fs::path outfile = fs::path(cfg.out_dir) /
                             ("fh_gamma_eps" + eps_tag(cfg.epsilon) + "_N" + std::to_string(N) + ".json");

    ExtractOutcome o;
    o.file = outfile;
    if (fs::exists(cpath)) {
        o.cache_hit = true;
        o.content = read_file(cpath);
    } else {
        const opuc::FHWeightSpec spec(cfg.epsilon);
        const opuc::ExtractionResult r = opuc::fh_extract(spec, N, cfg.prec());
        json body = opuc::to_json(r.scheme);
        body["provenance"] = opuc::to_json(r.provenance);
        o.content = opuc::json_with_meta(std::move(body),
                                         {{"config_hash", key},
                                          {"epsilon", opuc::format_double(cfg.epsilon)},
                                          {"N", std::to_string(N)},
                                          {"version", opuc::kVersion}});
        write_file(cpath, o.content);
    }
    write_file(outfile, o.content);
    return o;
}

int cmd_extract(const RunConfig& cfg, std::size_t N) {
    OutDirLock lock(cfg.out_dir);
    const ExtractOutcome o = run_extraction(cfg, N);
    std::cout << (o.cache_hit ? "cache hit: " : "extracted: ") << o.file.string() << "\n";
    return 0;
}

int cmd_construct(const RunConfig& cfg) {
    OutDirLock lock(cfg.out_dir);
    const int n = cfg.n;
    if (cfg.m < 16 * static_cast<std::size_t>(2 * n + 1))
        throw std::invalid_argument("grid too small: need m >= 16 (2n+1)");

    const ExtractOutcome ex = run_extraction(cfg, n);
    const opuc::VerblunskyScheme alpha =
        opuc::scheme_from_json(json::parse(ex.content));

    opuc::SteklovScheme scheme = opuc::build_scheme(alpha, n);
    scheme.epsilon = cfg.epsilon;
    const opuc::GridFunction w = opuc::steklov_weight(scheme, alpha, cfg.m);

    const double integral = opuc::grid_integral(w).real();
    double steklov_min = 1e300;
    for (const auto& v : w.values)
        steklov_min = std::min(steklov_min, 2.0 * std::numbers::pi * v.real());

    const std::string tag = "eps" + eps_tag(cfg.epsilon) + "_n" + std::to_string(n);
    const std::string cfg_hash =
        sha256_hex(canonical_extract_key(cfg.epsilon, n, cfg.precision) + ";m=" + std::to_string(cfg.m));
    const std::map<std::string, std::string> meta{{"config_hash", cfg_hash},
                                                  {"epsilon", opuc::format_double(cfg.epsilon)},
                                                  {"n", std::to_string(n)},
                                                  {"m", std::to_string(cfg.m)},
                                                  {"version", opuc::kVersion}};

    const fs::path wfile = fs::path(cfg.out_dir) / ("steklov_weight_" + tag + "_m" + std::to_string(cfg.m) + ".csv");
    write_file(wfile, opuc::grid_to_csv(w, meta));

    const fs::path sfile = fs::path(cfg.out_dir) / ("steklov_scheme_" + tag + ".json");
    write_file(sfile, opuc::json_with_meta(opuc::to_json(scheme), meta));

    json rep{{"epsilon", cfg.epsilon}, {"n", n},       {"m", cfg.m},
             {"integral", integral},   {"steklov_min", steklov_min}};
    const fs::path rfile = fs::path(cfg.out_dir) / ("construct_report_" + tag + "_m" + std::to_string(cfg.m) + ".json");
    write_file(rfile, opuc::json_with_meta(rep, meta));

    std::cout << "weight:  " << wfile.string() << "\nscheme:  " << sfile.string()
              << "\nreport:  " << rfile.string() << "\nintegral = " << integral
              << "  min 2*pi*w = " << steklov_min << "\n";
    return steklov_min > 0 ? 0 : 1;
}

std::string fixture_path() {
    return std::string(OPUC_SOURCE_DIR) + "/tests/fixtures/gamma_oracle.csv";
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    OutDirLock lock(cfg.out_dir);
    json criteria = opuc::default_criteria();
    if (cfg.large) {
        criteria["construction"]["n_list"].push_back(1024);
        criteria["growth"]["n_list"].push_back(1024);
    }
    if (!cfg.n_list.empty()) {
        for (int n : cfg.n_list)
            if (n < 1) throw std::invalid_argument("--n-list entries must be >= 1");
        criteria["construction"]["n_list"] = cfg.n_list;
        criteria["growth"]["n_list"] = cfg.n_list;
        criteria["l1"]["n_list"] = cfg.n_list;
    }

    std::vector<opuc::CriterionResult> results;
    json data;
    const auto run = [&](opuc::SuiteOutcome o, const std::string& name) {
        for (auto& r : o.results) results.push_back(std::move(r));
        data[name] = std::move(o.data);
    };

    if (suite == "identities" || suite == "all") {
        run(opuc::verify_identities(criteria, cfg.seed), "identities");
        run(opuc::verify_rotation(criteria, cfg.seed), "rotation");
        run(opuc::verify_roundtrip(criteria, cfg.seed), "roundtrip");
        run(opuc::verify_sum_rule(criteria, cfg.seed), "sum_rule");
        run(opuc::verify_special(criteria, fixture_path()), "special");
    }
    if (suite == "l4" || suite == "all") run(opuc::verify_l4(criteria, cfg.prec()), "l4");
    if (suite == "growth" || suite == "all") {
        run(opuc::verify_construction(criteria), "construction");
        run(opuc::verify_growth(criteria), "growth");
    }
    if (suite == "l1" || suite == "all") run(opuc::verify_l1(criteria), "l1");

    bool all_pass = true;
    json jres = json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        jres.push_back(json{{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << "  " << r.detail << "\n";
    }

    json report{{"suite", suite}, {"criteria", jres}, {"data", data}, {"pass", all_pass}};
    // the construction/growth/l4 summary block in the report schema
    if (data.contains("growth") && data.contains("construction")) {
        json summary{{"epsilon", data["growth"]["epsilon"]},
                     {"n", data["growth"]["n"]},
                     {"sup_phi", data["growth"]["sup_phi"]},
                     {"ratio_log", data["growth"]["ratio_log"]},
                     {"steklov_min", data["construction"]["steklov_min"]}};
        if (data.contains("l4") && data["l4"].is_array() && !data["l4"].empty()) {
            summary["l4_C_fit"] = data["l4"][1]["c_fit"];  // epsilon = 0.1 entry
            summary["l4_slope"] = data["l4"][1]["slope"];
        }
        report["summary"] = summary;
    }

    const std::string cfg_hash = sha256_hex(std::string("code=") + opuc::kVersion +
                                            ";kind=verify;suite=" + suite +
                                            ";seed=" + std::to_string(cfg.seed) +
                                            ";precision=" + cfg.precision +
                                            ";large=" + (cfg.large ? "1" : "0"));
    const fs::path rfile = fs::path(cfg.out_dir) / ("verify_" + suite + "_report.json");
    write_file(rfile, opuc::json_with_meta(report,
                                           {{"config_hash", cfg_hash}, {"version", opuc::kVersion}}));
    std::cout << "report: " << rfile.string() << "\n";
    return all_pass ? 0 : 1;
}

int cmd_export(const RunConfig& cfg, const std::string& what) {
    OutDirLock lock(cfg.out_dir);
    const fs::path out(cfg.out_dir);

    if (what == "gamma_vs_main") {
        const fs::path src = out / ("fh_gamma_eps" + eps_tag(cfg.epsilon) + "_N" +
                                    std::to_string(cfg.n) + ".json");
        if (!fs::exists(src))
            throw std::runtime_error("missing artifact " + src.string() +
                                     "; produce it with: opuc extract --epsilon " +
                                     eps_tag(cfg.epsilon) + " --n " + std::to_string(cfg.n));
        const opuc::VerblunskyScheme g = opuc::scheme_from_json(json::parse(read_file(src)));
        std::ostringstream csv;
        csv << "j,gamma_re,main_re,residual_abs\n";
        for (std::size_t j = 0; j < g.size(); ++j) {
            const opuc::cplx main = opuc::l4_main_term(static_cast<int>(j), cfg.epsilon);
            csv << j << ',' << opuc::format_double(g.gamma[j].real()) << ','
                << opuc::format_double(main.real()) << ','
                << opuc::format_double(std::abs(g.gamma[j] - main)) << "\n";
        }
        const fs::path dst = out / ("gamma_vs_main_eps" + eps_tag(cfg.epsilon) + "_N" +
                                    std::to_string(cfg.n) + ".csv");
        write_file(dst, csv.str());
        std::cout << "wrote " << dst.string() << "\n";
        return 0;
    }

    if (what == "weight") {
        const std::string tag = "eps" + eps_tag(cfg.epsilon) + "_n" + std::to_string(cfg.n) +
                                "_m" + std::to_string(cfg.m);
        const fs::path src = out / ("steklov_weight_" + tag + ".csv");
        if (!fs::exists(src))
            throw std::runtime_error("missing artifact " + src.string() +
                                     "; produce it with: opuc construct --epsilon " +
                                     eps_tag(cfg.epsilon) + " --n " + std::to_string(cfg.n) +
                                     " --grid " + std::to_string(cfg.m));
        const opuc::GridFunction w = opuc::grid_from_csv(read_file(src));
        std::ostringstream csv;
        csv << "theta,w\n";
        for (std::size_t k = 0; k < w.m; ++k)
            csv << opuc::format_double(w.theta(k)) << ',' << opuc::format_double(w.values[k].real())
                << "\n";
        const fs::path dst = out / ("weight_" + tag + ".csv");
        write_file(dst, csv.str());
        std::cout << "wrote " << dst.string() << "\n";
        return 0;
    }

    if (what == "supnorm_curve") {
        const fs::path src = out / "verify_growth_report.json";
        const fs::path src2 = out / "verify_all_report.json";
        const fs::path use = fs::exists(src) ? src : src2;
        if (!fs::exists(use))
            throw std::runtime_error("missing artifact " + src.string() +
                                     "; produce it with: opuc verify --suite growth");
        const json rep = json::parse(read_file(use));
        const json& g = rep.at("data").at("growth");
        std::ostringstream csv;
        csv << "n,sup,log_n,ratio\n";
        for (std::size_t i = 0; i < g.at("n").size(); ++i) {
            const double n = g.at("n")[i].get<double>();
            csv << g.at("n")[i].get<int>() << ',' << opuc::format_double(g.at("sup_phi")[i])
                << ',' << opuc::format_double(std::log(n)) << ','
                << opuc::format_double(g.at("ratio_log")[i]) << "\n";
        }
        const fs::path dst = out / ("supnorm_curve_eps" + eps_tag(cfg.epsilon) + ".csv");
        write_file(dst, csv.str());
        std::cout << "wrote " << dst.string() << "\n";
        return 0;
    }

    throw std::invalid_argument("unknown export kind: " + what);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schur-parameter counterexample pipeline for the circle Steklov problem"};
    app.require_subcommand(1);

    RunConfig cfg;
    int N = 512;
    std::string suite = "all";
    std::string what = "gamma_vs_main";

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--epsilon", cfg.epsilon, "jump strength, in (0, 0.3]")
            ->capture_default_str();
        sub->add_option("--grid,-m", cfg.m, "grid size (positive multiple of 4)")
            ->capture_default_str();
        sub->add_option("--precision", cfg.precision, "standard | high")->capture_default_str();
        sub->add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();
        sub->add_flag("--large", cfg.large, "include n = 1024 in the n-suites");
    };

    auto* ex = app.add_subcommand("extract", "extract Verblunsky coefficients of the two-jump weight");
    add_common(ex);
    ex->add_option("--n,-N", N, "number of coefficients")->capture_default_str();

    auto* co = app.add_subcommand("construct", "build the parameter scheme and synthesize the weight");
    add_common(co);
    co->add_option("--n", cfg.n, "block size n (scheme has 3n+1 entries)")->capture_default_str();

    auto* ve = app.add_subcommand("verify", "run verification suites against pinned criteria");
    add_common(ve);
    ve->add_option("--suite", suite, "identities | l4 | l1 | growth | all")->capture_default_str();
    ve->add_option("--n-list", cfg.n_list, "override the n-suite for construction/growth/l1")
        ->delimiter(',');

    auto* ep = app.add_subcommand("export", "emit tidy CSV plot data from cached artifacts");
    add_common(ep);
    ep->add_option("--what", what, "gamma_vs_main | weight | supnorm_curve")->capture_default_str();
    ep->add_option("--n", cfg.n, "n (or N) selecting the upstream artifact")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (ex->parsed()) {
            if (N < 1) throw std::invalid_argument("N must be >= 1");
            cfg.n = 1;  // unused by extract; keep validation happy
            cfg.validate();
            return cmd_extract(cfg, static_cast<std::size_t>(N));
        }
        if (co->parsed()) {
            cfg.validate();
            return cmd_construct(cfg);
        }
        if (ve->parsed()) {
            cfg.n = 1;
            cfg.validate();
            if (suite != "identities" && suite != "l4" && suite != "l1" && suite != "growth" &&
                suite != "all")
                throw std::invalid_argument("unknown suite: " + suite);
            return cmd_verify(cfg, suite);
        }
        if (ep->parsed()) {
            cfg.validate();
            return cmd_export(cfg, what);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
