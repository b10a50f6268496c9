#include "crystile/cli.hpp"

#include "crystile/render.hpp"
#include "crystile/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace crystile {

namespace {

std::int64_t env_budget() {
    if (const char* v = std::getenv("CRYSTILE_BUDGET")) {
        char* end = nullptr;
        long long parsed = std::strtoll(v, &end, 10);
        if (end && *end == '\0' && parsed > 0) return parsed;
    }
    return kDefaultPointBudget;
}

std::string verdict_json(const DiskVerdict& v) {
    std::string s = "{\"verdict\":\"" + to_string(v.verdict) + "\",\"reason\":\"" +
                    to_string(v.reason) + "\"";
    if (v.neighbor_count) s += ",\"neighbor_count\":" + std::to_string(*v.neighbor_count);
    return s + "}";
}

std::string digits_json(const std::vector<P2Element>& seq) {
    std::string s = "[";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ",";
        s += "\"" + to_string(seq[i]) + "\"";
    }
    return s + "]";
}

std::string witness_json(const Witness& w) {
    std::string s = "{\"x\":\"" + w.point.x.to_string() + "\",\"y\":\"" + w.point.y.to_string() +
                    "\",\"certificate\":";
    const WitnessCertificate& c = w.certificate;
    if (c.kind == WitnessCertificate::Kind::FixedPointPair) {
        s += "{\"type\":\"fixed_point_pair\",\"p\":" + std::to_string(c.p) +
             ",\"q\":" + std::to_string(c.q) + "}";
    } else {
        s += "{\"type\":\"walk\",\"preperiod\":" + digits_json(c.preperiod) +
             ",\"period\":" + digits_json(c.period) +
             ",\"companion_preperiod\":" + digits_json(c.companion_preperiod) +
             ",\"companion_period\":" + digits_json(c.companion_period) + "}";
    }
    return s + "}";
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw error("cannot open " + path + " for writing");
    os.write(data.data(), static_cast<std::streamsize>(data.size()));
}

int cmd_classify(std::ostream& os, std::int64_t A, std::int64_t B) {
    TileParams params = make_params(A, B);
    DiskVerdict closed = classify(params);
    SweepRow row = sweep_cell(params);
    os << "{\"A\":" << A << ",\"B\":" << B << ",\"classify\":" << verdict_json(closed)
       << ",\"independent\":";
    try {
        os << verdict_json(independent_disklike_check(params));
    } catch (const undecided_error&) {
        os << "null";
    }
    os << ",\"agree\":" << (row.agree ? "true" : "false") << "}\n";
    return 0;
}

int cmd_neighbors(std::ostream& os, std::int64_t A, std::int64_t B, bool lattice) {
    TileParams params = make_params(A, B);
    os << "{\"A\":" << A << ",\"B\":" << B;
    if (lattice) {
        os << ",\"lattice\":true,\"neighbors\":[";
        std::vector<IntV2> L = lattice_neighbor_set(params);
        for (std::size_t i = 0; i < L.size(); ++i) {
            if (i) os << ",";
            os << "[" << L[i].x << "," << L[i].y << "]";
        }
    } else {
        os << ",\"neighbors\":[";
        std::vector<P2Element> S = neighbor_set(params);
        for (std::size_t i = 0; i < S.size(); ++i) {
            if (i) os << ",";
            os << "\"" << to_string(S[i]) << "\"";
        }
    }
    os << "]}\n";
    return 0;
}

int cmd_graph(std::ostream& os, std::int64_t A, std::int64_t B, bool pseudo,
              const std::string& dot_path, const std::string& json_path) {
    TileParams params = make_params(A, B);
    NeighborGraph g = pseudo ? build_graph(pseudo_neighbor_set(params), params)
                             : build_graph(neighbor_set(params), params);
    std::string dot = graph_to_dot(g);
    if (!dot_path.empty()) {
        write_file(dot_path, dot);
        os << dot_path << "\n";
    }
    if (!json_path.empty()) {
        write_file(json_path, graph_to_json(g) + "\n");
        os << json_path << "\n";
    }
    if (dot_path.empty() && json_path.empty()) os << dot;
    return 0;
}

int cmd_verify(std::ostream& os, std::int64_t Amin, std::int64_t Amax, std::int64_t Bmin,
               std::int64_t Bmax) {
    std::vector<CheckResult> results = verify_range(Amin, Amax, Bmin, Bmax);
    std::size_t failures = 0;
    for (const CheckResult& r : results) {
        if (!r.pass) {
            ++failures;
            os << "FAIL " << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        }
    }
    os << (failures == 0 ? "PASS" : "FAIL") << " " << results.size() - failures << "/"
       << results.size() << " checks\n";
    return failures == 0 ? 0 : 1;
}

int cmd_witnesses(std::ostream& os, std::int64_t A, std::int64_t B) {
    TileParams params = make_params(A, B);
    WitnessPair pair = intersection_witnesses(params);
    os << "{\"A\":" << A << ",\"B\":" << B << ",\"points\":[" << witness_json(pair.first) << ","
       << witness_json(pair.second) << "]}\n";
    return 0;
}

int cmd_render(std::ostream& os, std::int64_t A, std::int64_t B, std::int64_t depth,
               int resolution, bool patch, bool png, const std::string& outdir,
               std::int64_t budget) {
    TileParams params = make_params(A, B);
    if (depth < 0) depth = default_render_depth(B);
    std::string stem = (patch ? std::string("patch") : std::string("tile")) + "_A" +
                       std::to_string(A) + "_B" + std::to_string(B) + "_d" + std::to_string(depth);
    std::string path = (outdir.empty() ? std::string() : outdir + "/") + stem +
                       (png ? ".png" : ".ppm");
    Raster raster = patch ? render_patch(params, neighbor_set(params), depth, resolution, budget)
                          : render_tile(params, depth, resolution, budget);
    if (png) {
        write_png(raster, path);
    } else {
        write_ppm(raster, path);
    }
    os << path << "\n";
    return 0;
}

int cmd_sweep(std::ostream& os, std::int64_t Amin, std::int64_t Amax, std::int64_t Bmin,
              std::int64_t Bmax, const std::string& csv_path) {
    std::vector<SweepRow> rows;
    for (std::int64_t A = Amin; A <= Amax; ++A)
        for (std::int64_t B = Bmin; B <= Bmax; ++B) {
            if (B < 2 || (A < 0 ? -A : A) > B) continue;
            rows.push_back(sweep_cell(make_params(A, B)));
        }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return a.A != b.A ? a.A < b.A : a.B < b.B;
    });
    std::string csv = sweep_csv(rows);
    if (!csv_path.empty()) {
        write_file(csv_path, csv);
        os << csv_path << "\n";
    } else {
        os << csv;
    }
    return 0;
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    CLI::App app{"crystallographic p2 replication tiles: neighbor graphs, disk-likeness, renders"};
    app.require_subcommand(1);

    std::int64_t A = 0, B = 2;
    std::int64_t Amin = -4, Amax = 4, Bmin = 2, Bmax = 10;
    std::int64_t depth = -1;
    int resolution = 800;
    bool lattice = false, pseudo = false, patch = false, png = false;
    std::string dot_path, json_path, csv_path, outdir;
    std::int64_t budget = env_budget();

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("-A,--A", A, "trace parameter")->required();
        cmd->add_option("-B,--B", B, "determinant parameter")->required();
    };
    auto add_ranges = [&](CLI::App* cmd) {
        cmd->add_option("--A-min", Amin);
        cmd->add_option("--A-max", Amax);
        cmd->add_option("--B-min", Bmin);
        cmd->add_option("--B-max", Bmax);
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "disk-likeness of the tile");
    add_params(classify_cmd);
    CLI::App* neighbors_cmd = app.add_subcommand("neighbors", "neighbor set of the tile");
    add_params(neighbors_cmd);
    neighbors_cmd->add_flag("--lattice", lattice, "neighbor set of the lattice tile");
    CLI::App* graph_cmd = app.add_subcommand("graph", "neighbor graph export");
    add_params(graph_cmd);
    graph_cmd->add_flag("--pseudo", pseudo, "export the pseudo-neighbor graph");
    graph_cmd->add_option("--dot", dot_path, "write DOT to this file");
    graph_cmd->add_option("--json", json_path, "write JSON to this file");
    CLI::App* verify_cmd = app.add_subcommand("verify", "verification battery over a range");
    add_ranges(verify_cmd);
    CLI::App* witnesses_cmd = app.add_subcommand("witnesses", "exact intersection witnesses");
    add_params(witnesses_cmd);
    CLI::App* render_cmd = app.add_subcommand("render", "rasterize the tile or a neighbor patch");
    add_params(render_cmd);
    render_cmd->add_option("--depth", depth, "address depth (default: ~400k points)");
    render_cmd->add_option("--resolution", resolution, "image size in pixels");
    render_cmd->add_flag("--patch", patch, "render the tile with all its neighbors");
    render_cmd->add_flag("--png", png, "write PNG instead of PPM");
    render_cmd->add_option("--out", outdir, "output directory");
    render_cmd->add_option("--budget", budget, "point budget cap");
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "classification sweep as CSV");
    add_ranges(sweep_cmd);
    sweep_cmd->add_option("--csv", csv_path, "write CSV to this file");

    std::vector<const char*> argv;
    argv.push_back("crystile");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream err;
        int code = app.exit(e, err, err);
        return {code == 0 ? 0 : 2, err.str()};
    }

    try {
        int code = 1;
        if (app.got_subcommand(classify_cmd)) code = cmd_classify(out, A, B);
        else if (app.got_subcommand(neighbors_cmd)) code = cmd_neighbors(out, A, B, lattice);
        else if (app.got_subcommand(graph_cmd)) code = cmd_graph(out, A, B, pseudo, dot_path, json_path);
        else if (app.got_subcommand(verify_cmd)) code = cmd_verify(out, Amin, Amax, Bmin, Bmax);
        else if (app.got_subcommand(witnesses_cmd)) code = cmd_witnesses(out, A, B);
        else if (app.got_subcommand(render_cmd))
            code = cmd_render(out, A, B, depth, resolution, patch, png, outdir, budget);
        else if (app.got_subcommand(sweep_cmd)) code = cmd_sweep(out, Amin, Amax, Bmin, Bmax, csv_path);
        return {code, out.str()};
    } catch (const invalid_params_error& e) {
        out << "error: " << e.what() << "\n";
        return {2, out.str()};
    } catch (const out_of_regime_error& e) {
        out << "error: " << e.what() << "\n";
        return {3, out.str()};
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return {1, out.str()};
    }
}

} // namespace crystile
