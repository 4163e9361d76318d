#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wafom/bounds.hpp"
#include "wafom/errors.hpp"
#include "wafom/f2.hpp"
#include "wafom/format.hpp"
#include "wafom/netio.hpp"
#include "wafom/qmc.hpp"
#include "wafom/wafom.hpp"

namespace {

using nlohmann::json;

// distinct exit codes per failure class, part of the CLI contract
enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kParse = 3,
    kCap = 4,
    kVerifyFail = 5,
};

struct Options {
    std::vector<std::string> net_files;
    std::string gen;  // "s,n,m" or "s,n,m,count"
    std::uint64_t seed = 0;
    double c_prime = 1.0;
    std::string method = "dual";
    bool exhaustive = false;
    std::string function;
    std::string out_path;
    std::string format = "csv";
    int cap = wafom::kDefaultEnumCap;
    std::string save_net = "best.net";
};

struct GenSpec {
    int s = 0;
    int n = 0;
    int m = 0;
    long long count = 1;
};

GenSpec parse_gen(const std::string& text) {
    std::vector<long long> parts;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (cur.empty() || cur.size() > 10) {
                throw std::invalid_argument("--gen expects s,n,m[,count]");
            }
            for (char d : cur) {
                if (d < '0' || d > '9') {
                    throw std::invalid_argument("--gen expects nonnegative integers");
                }
            }
            parts.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (parts.size() != 3 && parts.size() != 4) {
        throw std::invalid_argument("--gen expects s,n,m[,count]");
    }
    GenSpec g;
    g.s = static_cast<int>(parts[0]);
    g.n = static_cast<int>(parts[1]);
    g.m = static_cast<int>(parts[2]);
    g.count = parts.size() == 4 ? parts[3] : 1;
    if (g.s < 1 || g.n < 1) {
        throw std::invalid_argument("--gen needs s >= 1 and n >= 1");
    }
    if (g.m < 0 || g.m > static_cast<long long>(g.s) * g.n) {
        throw std::invalid_argument("--gen needs 0 <= m <= s*n");
    }
    if (g.count < 1) {
        throw std::invalid_argument("--gen needs count >= 1");
    }
    return g;
}

struct NamedNet {
    std::string id;
    wafom::Subspace net;
};

std::vector<NamedNet> load_inputs(const Options& opt) {
    std::vector<NamedNet> nets;
    for (const std::string& path : opt.net_files) {
        nets.push_back({path, wafom::read_net_file(path)});
    }
    if (!opt.gen.empty()) {
        const GenSpec g = parse_gen(opt.gen);
        for (long long i = 0; i < g.count; ++i) {
            nets.push_back({"gen-" + std::to_string(i),
                            wafom::random_net(g.s, g.n, g.m,
                                              wafom::derive_seed(opt.seed,
                                                                 static_cast<std::uint64_t>(i)))});
        }
    }
    if (nets.empty()) {
        throw std::invalid_argument("no inputs: pass --net FILE and/or --gen s,n,m,count");
    }
    return nets;
}

wafom::WafomValue compute(const wafom::Subspace& p, const std::string& method,
                          int cap) {
    if (method == "dual") return wafom::wafom_dual(p, cap);
    if (method == "points") return wafom::wafom_points(p, cap);
    return wafom::wafom_exact_value(p, cap);
}

// JSON has no infinities; mirror the CSV sentinel strings there
json json_real(double v) {
    if (std::isfinite(v)) return v;
    return wafom::format_double(v);
}

void emit(const Options& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file \"" + opt.out_path + "\"");
    f << payload;
    f.flush();
    if (!f) throw std::runtime_error("failed writing \"" + opt.out_path + "\"");
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

int cmd_wafom(const Options& opt) {
    const std::vector<NamedNet> nets = load_inputs(opt);
    std::string csv = "id,s,n,m,method,wafom,wafom_log2,exact\n";
    json rows = json::array();
    for (const NamedNet& in : nets) {
        const wafom::WafomValue w = compute(in.net, opt.method, opt.cap);
        const std::string exact = w.exact ? w.exact->to_string() : "";
        csv += in.id;
        csv += ',' + std::to_string(in.net.rows());
        csv += ',' + std::to_string(in.net.cols());
        csv += ',' + std::to_string(in.net.dim());
        csv += ',' + to_string(w.method);
        csv += ',' + wafom::format_double(w.value);
        csv += ',' + wafom::format_double(w.log2_value);
        csv += ',' + exact;
        csv += '\n';
        json row = {{"id", in.id},
                    {"s", in.net.rows()},
                    {"n", in.net.cols()},
                    {"m", in.net.dim()},
                    {"method", to_string(w.method)},
                    {"wafom", json_real(w.value)},
                    {"wafom_log2", json_real(w.log2_value)}};
        if (w.exact) row["exact"] = exact;
        rows.push_back(std::move(row));
    }
    if (opt.format == "json") {
        emit(opt, dump_json({{"schema", "dignet/1"}, {"command", "wafom"}, {"rows", rows}}));
    } else {
        emit(opt, csv);
    }
    return kOk;
}

json report_json(const wafom::VerificationReport& r, const std::string& id) {
    return {{"id", id},
            {"s", r.s},
            {"n", r.n},
            {"m", r.m},
            {"c_prime", r.c_prime},
            {"delta", r.delta},
            {"delta_bound", r.delta_bound},
            {"wafom_log2", json_real(r.wafom_log2)},
            {"lower_bound_log2", json_real(r.lower_bound_log2)},
            {"threshold_ok", r.threshold_ok},
            {"lemma_ok", r.lemma_ok},
            {"wfdelta_ok", r.wfdelta_ok},
            {"theorem_ok", r.theorem_ok}};
}

int cmd_verify(const Options& opt) {
    if (!(opt.c_prime > 0.5)) {
        throw std::invalid_argument("--cprime must exceed 0.5");
    }
    std::vector<NamedNet> nets;
    if (opt.exhaustive) {
        if (opt.gen.empty()) {
            throw std::invalid_argument("--exhaustive needs --gen s,n,m");
        }
        const GenSpec g = parse_gen(opt.gen);
        wafom::SubspaceEnumerator en(g.s, g.n, g.m);
        long long i = 0;
        while (auto sp = en.next()) {
            nets.push_back({"ex-" + std::to_string(i++), std::move(*sp)});
        }
    } else {
        nets = load_inputs(opt);
    }
    std::string csv = wafom::report_csv_header() + "\n";
    json rows = json::array();
    bool falsified = false;
    for (const NamedNet& in : nets) {
        const wafom::VerificationReport r =
            wafom::verify_net(in.net, opt.c_prime, opt.cap);
        if (r.threshold_ok && !r.theorem_ok) falsified = true;
        csv += wafom::report_csv_row(r, in.id) + "\n";
        rows.push_back(report_json(r, in.id));
    }
    if (opt.format == "json") {
        emit(opt, dump_json({{"schema", "dignet/1"},
                             {"command", "verify"},
                             {"rows", rows},
                             {"falsified", falsified}}));
    } else {
        emit(opt, csv);
    }
    return falsified ? kVerifyFail : kOk;
}

int cmd_search(const Options& opt) {
    if (opt.gen.empty()) {
        throw std::invalid_argument("search needs --gen s,n,m,count");
    }
    const GenSpec g = parse_gen(opt.gen);
    std::optional<wafom::Subspace> best;
    wafom::WafomValue best_value;
    long long best_index = -1;
    for (long long i = 0; i < g.count; ++i) {
        wafom::Subspace net = wafom::random_net(
            g.s, g.n, g.m, wafom::derive_seed(opt.seed, static_cast<std::uint64_t>(i)));
        const wafom::WafomValue w = compute(net, opt.method, opt.cap);
        if (!best || w.value < best_value.value) {
            best = std::move(net);
            best_value = w;
            best_index = i;
        }
    }
    wafom::write_net_file(opt.save_net, *best);

    const double target_log2 =
        -static_cast<double>(g.m) * static_cast<double>(g.m) / static_cast<double>(g.s);
    const double ratio = best_value.log2_value / target_log2;
    std::string csv = "s,n,m,count,seed,best_index,wafom,wafom_log2,log2_ratio,saved\n";
    csv += std::to_string(g.s);
    csv += ',' + std::to_string(g.n);
    csv += ',' + std::to_string(g.m);
    csv += ',' + std::to_string(g.count);
    csv += ',' + std::to_string(opt.seed);
    csv += ',' + std::to_string(best_index);
    csv += ',' + wafom::format_double(best_value.value);
    csv += ',' + wafom::format_double(best_value.log2_value);
    csv += ',' + wafom::format_double(ratio);
    csv += ',' + opt.save_net;
    csv += '\n';
    if (opt.format == "json") {
        emit(opt, dump_json({{"schema", "dignet/1"},
                             {"command", "search"},
                             {"s", g.s},
                             {"n", g.n},
                             {"m", g.m},
                             {"count", g.count},
                             {"seed", opt.seed},
                             {"best_index", best_index},
                             {"wafom", json_real(best_value.value)},
                             {"wafom_log2", json_real(best_value.log2_value)},
                             {"log2_ratio", json_real(ratio)},
                             {"saved", opt.save_net}}));
    } else {
        emit(opt, csv);
    }
    return kOk;
}

int cmd_integrate(const Options& opt) {
    if (opt.function.empty()) {
        throw std::invalid_argument("integrate needs --function NAME");
    }
    const std::vector<NamedNet> nets = load_inputs(opt);
    std::string csv = "id,function,wafom,wafom_log2,abs_error\n";
    json rows = json::array();
    std::vector<double> wafoms;
    std::vector<double> errors;
    for (const NamedNet& in : nets) {
        const wafom::TestFunction f =
            wafom::make_test_function(opt.function, in.net.rows());
        const wafom::PointSet points = wafom::to_points(in.net, opt.cap);
        const double estimate = wafom::qmc_integrate(points, f);
        const double err = std::abs(estimate - f.integral);
        const wafom::WafomValue w = compute(in.net, opt.method, opt.cap);
        wafoms.push_back(w.value);
        errors.push_back(err);
        csv += in.id;
        csv += ',' + opt.function;
        csv += ',' + wafom::format_double(w.value);
        csv += ',' + wafom::format_double(w.log2_value);
        csv += ',' + wafom::format_double(err);
        csv += '\n';
        rows.push_back({{"id", in.id},
                        {"function", opt.function},
                        {"wafom", json_real(w.value)},
                        {"wafom_log2", json_real(w.log2_value)},
                        {"abs_error", err}});
    }
    json doc = {{"schema", "dignet/1"}, {"command", "integrate"}, {"rows", rows}};
    if (nets.size() >= 2) {
        const double rho = wafom::spearman(wafoms, errors);
        csv += "# spearman," + wafom::format_double(rho) + "\n";
        doc["spearman"] = json_real(rho);
    }
    emit(opt, opt.format == "json" ? dump_json(doc) : csv);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"WAFOM and minimum Dick weight of digital nets over F2"};
    app.require_subcommand(1);
    Options opt;

    const auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_option("--net", opt.net_files, "net file (repeatable)");
        cmd->add_option("--gen", opt.gen, "generate random nets: s,n,m[,count]");
        cmd->add_option("--seed", opt.seed, "base seed for generated nets");
        cmd->add_option("--method", opt.method, "wafom method")
            ->check(CLI::IsMember({"dual", "points", "exact"}));
        cmd->add_option("--out", opt.out_path, "output file (default: stdout)");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--cap-dim", opt.cap, "enumeration cap on subspace dimension")
            ->check(CLI::Range(1, wafom::kHardEnumLimit));
    };

    CLI::App* wafom_cmd = app.add_subcommand("wafom", "compute WAFOM per net");
    add_common(wafom_cmd);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check the WAFOM lower bound per net");
    add_common(verify_cmd);
    verify_cmd->add_option("--cprime", opt.c_prime, "bound constant C' (> 0.5)");
    verify_cmd->add_flag("--exhaustive", opt.exhaustive,
                         "verify every m-dimensional net of the --gen shape");

    CLI::App* search_cmd =
        app.add_subcommand("search", "sample nets and keep the lowest WAFOM");
    add_common(search_cmd);
    search_cmd->add_option("--save-net", opt.save_net,
                           "file for the best net (default: best.net)");

    CLI::App* integrate_cmd =
        app.add_subcommand("integrate", "QMC-integrate a test function per net");
    add_common(integrate_cmd);
    integrate_cmd->add_option("--function", opt.function,
                              "test function: const1|linear|product|expprod");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (wafom_cmd->parsed()) return cmd_wafom(opt);
        if (verify_cmd->parsed()) return cmd_verify(opt);
        if (search_cmd->parsed()) return cmd_search(opt);
        return cmd_integrate(opt);
    } catch (const wafom::NetParseError& e) {
        std::cerr << "dignet: parse error: " << e.what() << '\n';
        return kParse;
    } catch (const wafom::CapExceeded& e) {
        std::cerr << "dignet: " << e.what() << '\n';
        return kCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "dignet: usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "dignet: " << e.what() << '\n';
        return kInternal;
    }
}
