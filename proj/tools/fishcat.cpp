// Command-line surface for enumerating, mapping, verifying, and rendering
// Stoimenow matchings and the companion Fishburn structures.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fishcat/bijections.hpp"
#include "fishcat/matching.hpp"
#include "fishcat/patterns.hpp"
#include "fishcat/poset.hpp"
#include "fishcat/render.hpp"
#include "fishcat/seqperm.hpp"
#include "fishcat/series.hpp"
#include "fishcat/verify.hpp"

namespace {

using namespace fishcat;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomainError = 3;

struct EnumerateArgs {
    std::string structure;
    int n = 0;
    std::string avoid;
    bool count = false;
    bool stats = false;
    std::string format = "table";
};

PosetAvoid poset_avoid_from(const std::string& avoid) {
    if (avoid.empty()) return PosetAvoid::None;
    if (avoid == "3+1") return PosetAvoid::ThreePlusOne;
    if (avoid == "N") return PosetAvoid::NShape;
    throw Error("UnknownPattern", "poset avoidance must be '3+1' or 'N'");
}

SeqAvoid seq_avoid_from(const std::string& avoid) {
    if (avoid.empty()) return SeqAvoid::None;
    if (avoid == "101") return SeqAvoid::W101;
    if (avoid == "0101") return SeqAvoid::W0101;
    throw Error("UnknownPattern", "sequence avoidance must be '101' or '0101'");
}

void emit_rows(const EnumerateArgs& args, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    if (args.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json obj;
            for (std::size_t c = 0; c < header.size(); ++c) obj[header[c]] = row[c];
            j.push_back(obj);
        }
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (args.format == "csv") {
        for (std::size_t c = 0; c < header.size(); ++c)
            std::cout << header[c] << (c + 1 < header.size() ? "," : "\n");
        for (const auto& row : rows)
            for (std::size_t c = 0; c < row.size(); ++c)
                std::cout << row[c] << (c + 1 < row.size() ? "," : "\n");
        return;
    }
    if (args.stats) {
        for (std::size_t c = 0; c < header.size(); ++c)
            std::cout << header[c] << (c + 1 < header.size() ? "\t" : "\n");
    }
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            std::cout << row[c] << (c + 1 < row.size() ? "\t" : "\n");
    }
}

int cmd_enumerate(const EnumerateArgs& args) {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    long long count = 0;
    if (args.structure == "matching") {
        auto ms = cached_matchings(args.n, args.avoid);
        count = static_cast<long long>(ms->size());
        if (!args.count) {
            header = {"matching"};
            if (args.stats) header = {"matching", "cr", "nr", "mcr", "fcr", "bl"};
            for (const Matching& m : *ms) {
                std::vector<std::string> row{m.str()};
                if (args.stats) {
                    MatchStats s = match_stats(m);
                    for (int v : {s.cr, s.nr, s.mcr, s.fcr, s.bl}) row.push_back(std::to_string(v));
                }
                rows.push_back(std::move(row));
            }
        }
    } else if (args.structure == "poset") {
        auto ps = cached_posets(args.n, poset_avoid_from(args.avoid));
        count = static_cast<long long>(ps->size());
        if (!args.count) {
            header = {"poset"};
            if (args.stats) header = {"poset", "mag", "min", "h", "w", "smc", "ssd"};
            for (const Poset& p : *ps) {
                std::vector<std::string> row{p.json()};
                if (args.stats) {
                    PosetStats s = poset_stats(p);
                    for (int v : {s.mag, s.min, s.h, s.w, s.smc, s.ssd})
                        row.push_back(std::to_string(v));
                }
                rows.push_back(std::move(row));
            }
        }
    } else if (args.structure == "ascent") {
        auto as = cached_seqs(args.n, seq_avoid_from(args.avoid));
        count = static_cast<long long>(as->size());
        if (!args.count) {
            header = {"sequence"};
            if (args.stats) header = {"sequence", "asc", "zero", "lmax", "rmin"};
            for (const AscentSeq& a : *as) {
                std::vector<std::string> row{seq_str(a)};
                if (args.stats) {
                    SeqStats s = seq_stats(a);
                    for (int v : {s.asc, s.zero, s.lmax, s.rmin}) row.push_back(std::to_string(v));
                }
                rows.push_back(std::move(row));
            }
        }
    } else if (args.structure == "fishburn-perm") {
        bool avoid3142 = false;
        if (args.avoid == "3142")
            avoid3142 = true;
        else if (!args.avoid.empty())
            throw Error("UnknownPattern", "permutation avoidance must be '3142'");
        auto fs = cached_perms(args.n, avoid3142);
        count = static_cast<long long>(fs->size());
        if (!args.count) {
            header = {"permutation"};
            if (args.stats) header = {"permutation", "lmax", "rmin", "idr"};
            for (const Perm& pi : *fs) {
                std::vector<std::string> row{perm_str(pi)};
                if (args.stats) {
                    PermStats s = perm_stats(pi);
                    for (int v : {s.lmax, s.rmin, s.idr}) row.push_back(std::to_string(v));
                }
                rows.push_back(std::move(row));
            }
        }
    } else if (args.structure == "dyck") {
        if (!args.avoid.empty()) throw Error("UnknownPattern", "dyck paths take no avoidance");
        auto paths = enumerate_dyck(args.n);
        count = static_cast<long long>(paths.size());
        if (!args.count) {
            header = {"path"};
            if (args.stats) header = {"path", "height"};
            for (const DyckPath& mu : paths) {
                std::vector<std::string> row{mu.steps.empty() ? "(empty)" : mu.steps};
                if (args.stats) row.push_back(std::to_string(dyck_height(mu)));
                rows.push_back(std::move(row));
            }
        }
    } else {
        throw CLI::ValidationError("--structure must be one of matching|poset|ascent|fishburn-perm|dyck");
    }
    if (args.count) {
        std::cout << count << "\n";
        return 0;
    }
    emit_rows(args, header, rows);
    return 0;
}

int cmd_map(const std::string& bijection, const std::string& input, int k) {
    if (bijection == "omega") {
        std::cout << omega(Matching::parse(input)).json() << "\n";
    } else if (bijection == "gamma") {
        std::cout << gamma(parse_dyck(input)).str() << "\n";
    } else if (bijection == "gamma-inv") {
        std::cout << gamma_inverse(Matching::parse(input)).steps << "\n";
    } else if (bijection == "theta") {
        std::cout << theta(Matching::parse(input)).str() << "\n";
    } else if (bijection == "v") {
        std::cout << v_map(Matching::parse(input)).str() << "\n";
    } else if (bijection == "phi") {
        std::cout << phi(Matching::parse(input), k).str() << "\n";
    } else if (bijection == "phi-inv") {
        std::cout << phi_inverse(Matching::parse(input), k).str() << "\n";
    } else if (bijection == "psi") {
        std::cout << seq_str(psi_p2(Matching::parse(input))) << "\n";
    } else if (bijection == "psi-inv") {
        std::cout << psi_p2_inverse(parse_seq(input)).str() << "\n";
    } else if (bijection == "upsilon") {
        std::cout << perm_str(upsilon_p2(Matching::parse(input))) << "\n";
    } else if (bijection == "upsilon-inv") {
        std::cout << upsilon_p2_inverse(parse_perm(input)).str() << "\n";
    } else if (bijection == "lambda") {
        std::cout << perm_str(lambda_map(parse_seq(input))) << "\n";
    } else if (bijection == "delta") {
        std::cout << seq_str(delta(parse_seq(input))) << "\n";
    } else if (bijection == "transpose") {
        std::cout << perm_str(transpose(parse_seq(input))) << "\n";
    } else {
        throw CLI::ValidationError(
            "--bijection must be one of omega|gamma|gamma-inv|theta|v|phi|phi-inv|psi|psi-inv|"
            "upsilon|upsilon-inv|lambda|delta|transpose");
    }
    return 0;
}

int cmd_verify(const std::string& suite, std::optional<int> max_n, const std::string& format,
               bool sequential) {
    VerifyReport report = run_suite(suite, max_n, !sequential);
    if (format == "json")
        std::cout << report.json() << "\n";
    else if (format == "csv")
        std::cout << report.csv();
    else
        std::cout << report.table();
    return report.pass() ? 0 : kExitVerifyFailure;
}

int cmd_conjecture(int max_n, const std::string& format) {
    auto rows = conjecture_rows(max_n);
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json obj;
            obj["n"] = row.n;
            obj["nr_over_P1_avoiders"] = row.avoider_nr.str();
            obj["h_over_3p1_posets"] = row.poset_h.str();
            obj["h_over_dyck_paths"] = row.dyck_h.str();
            obj["agree"] = row.agree;
            j.push_back(obj);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& row : rows) {
        std::cout << "n=" << row.n << (row.agree ? "  [agree]" : "  [DIFFER]") << "\n"
                  << "  nr over P1-avoiding matchings : " << row.avoider_nr.str() << "\n"
                  << "  h  over (2+2,3+1)-free posets : " << row.poset_h.str() << "\n"
                  << "  h  over Dyck paths            : " << row.dyck_h.str() << "\n";
    }
    int agreeing = 0;
    for (const auto& row : rows)
        if (row.agree) ++agreeing;
    std::cout << "agreement: " << agreeing << "/" << rows.size()
              << " (comparison only; nothing is asserted)\n";
    return 0;
}

int cmd_render(const std::string& input, const std::string& structure) {
    std::string kind = structure;
    if (kind.empty()) {
        if (input.find_first_not_of("UD") == std::string::npos && !input.empty())
            kind = "dyck";
        else if (input.find("relations") != std::string::npos)
            kind = "poset";
        else
            kind = "matching";
    }
    if (kind == "dyck")
        std::cout << render_dyck(parse_dyck(input));
    else if (kind == "poset")
        std::cout << render_poset(Poset::from_json(input));
    else
        std::cout << render_matching(Matching::parse(input));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Catalan structure toolkit for Stoimenow matchings and Fishburn objects"};
    app.require_subcommand(1);
    std::string cache;
    app.add_option("--cache-dir", cache, "directory for enumeration caches (env FISHCAT_CACHE_DIR)");

    EnumerateArgs enum_args;
    CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate a structure class");
    enumerate->add_option("--structure", enum_args.structure,
                          "matching|poset|ascent|fishburn-perm|dyck")->required();
    enumerate->add_option("--n", enum_args.n, "object size")->required()->check(CLI::Range(0, 12));
    enumerate->add_option("--avoid", enum_args.avoid,
                          "pattern to avoid (P1..P5, P2k:K..P5k:K, arc list, 3+1, N, 101, 0101, 3142)");
    enumerate->add_flag("--count", enum_args.count, "print only the count");
    enumerate->add_flag("--stats", enum_args.stats, "append per-object statistics");
    enumerate->add_option("--format", enum_args.format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    std::string bijection, map_input;
    int map_k = 4;
    CLI::App* map_cmd = app.add_subcommand("map", "apply a bijection to one object");
    map_cmd->add_option("--bijection", bijection,
                        "omega|gamma|gamma-inv|theta|v|phi|phi-inv|psi|psi-inv|upsilon|"
                        "upsilon-inv|lambda|delta|transpose")->required();
    map_cmd->add_option("--input", map_input, "object in its text format")->required();
    map_cmd->add_option("--k", map_k, "family parameter for phi/phi-inv (default 4)")
        ->check(CLI::Range(2, 12));

    std::string suite = "all", verify_format = "table";
    std::optional<int> verify_max_n;
    bool sequential = false;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "verification suite to run")
        ->check(CLI::IsMember(fishcat::suite_names()));
    verify->add_option("--max-n", verify_max_n, "override the default size range");
    verify->add_option("--format", verify_format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    verify->add_flag("--sequential", sequential, "run checks on one worker");

    int conj_max_n = 9;
    std::string conj_format = "table";
    CLI::App* conjecture = app.add_subcommand(
        "conjecture", "compare the nr and height distributions (report only)");
    conjecture->add_option("--max-n", conj_max_n, "largest size (<= 11)")->check(CLI::Range(0, 11));
    conjecture->add_option("--format", conj_format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    std::string render_input, render_structure;
    CLI::App* render = app.add_subcommand("render", "draw an object as ASCII art");
    render->add_option("--input", render_input, "matching, Dyck word, or poset JSON")->required();
    render->add_option("--structure", render_structure, "matching|dyck|poset (default: guess)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (!cache.empty()) fishcat::set_cache_dir(cache);

    try {
        if (*enumerate) return cmd_enumerate(enum_args);
        if (*map_cmd) return cmd_map(bijection, map_input, map_k);
        if (*verify) return cmd_verify(suite, verify_max_n, verify_format, sequential);
        if (*conjecture) return cmd_conjecture(conj_max_n, conj_format);
        if (*render) return cmd_render(render_input, render_structure);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const fishcat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitUsage;
}
