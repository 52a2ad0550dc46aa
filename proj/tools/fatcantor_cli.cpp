// Command-line front end. Talks to the library exclusively through the
// C interface; text tables are rendered from the library's JSON.

#include "fatcantor.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

struct ParamsDeleter {
    void operator()(fc_params* p) const { fc_params_free(p); }
};
using ParamsHandle = std::unique_ptr<fc_params, ParamsDeleter>;

struct StringDeleter {
    void operator()(char* s) const { fc_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(2);
}

ParamsHandle make_params(int depth) {
    fc_params* raw = nullptr;
    if (fc_params_create(depth, &raw) != FC_OK) die_usage(fc_last_error());
    return ParamsHandle(raw);
}

// Takes the address so the string is read only after the producing call
// has run; passing `s` by value would read it before it is filled in.
CString check(fc_status st, char** s) {
    if (st != FC_OK) die_usage(fc_last_error());
    return CString(*s);
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) die_usage("cannot open output file " + out_path);
    f << content;
}

std::string col(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size() + 1, ' ');
}

void render_validation(const Json& v) {
    std::cout << "validation: " << (v["ok"].get<bool>() ? "all pass" : "FAILURES") << "\n";
    for (const auto& c : v["checks"]) {
        if (c["pass"].get<bool>()) continue;
        std::cout << "  FAIL " << c["name"].get<std::string>() << " at "
                  << c["instance"].get<std::string>() << ": " << c["lhs"].get<std::string>() << " "
                  << c["relation"].get<std::string>() << " " << c["rhs"].get<std::string>() << "\n";
    }
}

int run_params(int depth, bool json, const std::string& out) {
    auto p = make_params(depth);
    char* s = nullptr;
    auto body = check(fc_params_json(p.get(), &s), &s);
    if (json) {
        emit(body.get(), out);
        return 0;
    }
    Json j = Json::parse(body.get());
    std::cout << j["chooser"].get<std::string>() << "\n";
    std::cout << col("k", 4) << col("w_k", 24) << col("eps_k", 24) << col("~w_k", 16)
              << "~eps_k (decimals display-only)\n";
    for (const auto& row : j["rows"])
        std::cout << col(std::to_string(row["k"].get<int>()), 4)
                  << col(row["w"].get<std::string>(), 24) << col(row["eps"].get<std::string>(), 24)
                  << col(row["w_decimal"].get<std::string>(), 16)
                  << row["eps_decimal"].get<std::string>() << "\n";
    render_validation(j["validation"]);
    return j["validation"]["ok"].get<bool>() ? 0 : 1;
}

int run_intervals(int depth, int level, bool json, bool csv, const std::string& out) {
    auto p = make_params(depth);
    char* s = nullptr;
    if (csv) {
        auto body = check(fc_intervals_csv(p.get(), level, &s), &s);
        emit(body.get(), out);
        return 0;
    }
    auto body = check(fc_intervals_json(p.get(), level, &s), &s);
    if (json) {
        emit(body.get(), out);
        return 0;
    }
    Json j = Json::parse(body.get());
    std::cout << "I_" << j["level"].get<int>() << ": " << j["members"].size() << " members, measure "
              << j["measure"].get<std::string>() << "\n";
    for (const auto& m : j["members"])
        std::cout << "  [" << m["lo"].get<std::string>() << ", " << m["hi"].get<std::string>()
                  << "]\n";
    return 0;
}

int run_measure(int depth, bool json, const std::string& out) {
    auto p = make_params(depth);
    char* s = nullptr;
    auto body = check(fc_measure_json(p.get(), depth, &s), &s);
    if (json) {
        emit(body.get(), out);
        return 0;
    }
    Json j = Json::parse(body.get());
    std::cout << col("K", 4) << col("upper", 28) << col("lower", 28) << col("~upper", 16)
              << "~lower (decimals display-only)\n";
    for (const auto& row : j["rows"])
        std::cout << col(std::to_string(row["K"].get<int>()), 4)
                  << col(row["upper"].get<std::string>(), 28)
                  << col(row["lower"].get<std::string>(), 28)
                  << col(row["upper_decimal"].get<std::string>(), 16)
                  << row["lower_decimal"].get<std::string>() << "\n";
    return 0;
}

int run_eval(int depth, const std::string& x, const std::string& tol, const std::string& map,
             bool json, const std::string& out) {
    if (map != "f" && map != "g") die_usage("--map must be f or g");
    auto p = make_params(depth);
    char* s = nullptr;
    auto body = check(fc_eval_json(p.get(), x.c_str(), tol.empty() ? nullptr : tol.c_str(), map[0], &s), &s);
    if (json) {
        emit(body.get(), out);
        return 0;
    }
    Json j = Json::parse(body.get());
    std::cout << map << "(" << j["x"].get<std::string>() << ") = " << j["value"].get<std::string>()
              << " (~" << j["value_decimal"].get<std::string>() << ")"
              << ", radius " << j["radius"].get<std::string>() << ", "
              << (j["exact"].get<bool>() ? "exact" : "certified approximation") << ", level "
              << j["level"].get<int>() << "\n";
    return 0;
}

int run_plot(int depth, int level, int points, bool json, const std::string& out) {
    auto p = make_params(depth);
    char* s = nullptr;
    if (json) {
        auto body = check(fc_plf_json(p.get(), level, &s), &s);
        emit(body.get(), out);
        return 0;
    }
    auto body = check(fc_plot_csv(p.get(), level, points, &s), &s);
    emit(body.get(), out);
    return 0;
}

int run_similitude(const std::string& maps, int depth, bool json, const std::string& out) {
    char* s = nullptr;
    auto body = check(fc_similitude_json(maps.c_str(), depth, &s), &s);
    Json j = Json::parse(body.get());
    if (json) {
        emit(body.get(), out);
        return j["validation"]["ok"].get<bool>() ? 0 : 1;
    }
    render_validation(j["validation"]);
    if (!j["validation"]["ok"].get<bool>()) return 1;
    std::cout << col("k", 4) << col("measure(A_k)", 24) << "~measure (display-only)\n";
    for (const auto& row : j["measures"])
        std::cout << col(std::to_string(row["k"].get<int>()), 4)
                  << col(row["measure"].get<std::string>(), 24)
                  << row["measure_decimal"].get<std::string>() << "\n";
    return 0;
}

int run_verify(int depth, int max_level, bool json, bool junit, const std::string& out) {
    auto p = make_params(depth);
    char* s = nullptr;
    int fails = 0;
    if (junit) {
        auto body = check(fc_verify_junit(p.get(), max_level, &fails, &s), &s);
        emit(body.get(), out);
        return fails == 0 ? 0 : 1;
    }
    auto body = check(fc_verify_json(p.get(), max_level, &fails, &s), &s);
    if (json) {
        emit(body.get(), out);
        return fails == 0 ? 0 : 1;
    }
    Json j = Json::parse(body.get());
    for (const auto& c : j["claims"]) {
        std::cout << col(c["status"].get<std::string>(), 10) << col(c["id"].get<std::string>(), 28)
                  << col(c["instance"].get<std::string>(), 10) << c["anchor"].get<std::string>();
        auto w = c["witness"].get<std::string>();
        if (!w.empty()) std::cout << "  [" << w << "]";
        std::cout << "\n";
    }
    std::cout << (fails == 0 ? "verification passed" : "verification FAILED") << " (" << fails
              << " failing claims)\n";
    return fails == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic construction and verification of a positive-measure "
                 "Cantor-type IFS attractor"};
    app.require_subcommand(1);

    int depth = 8, level = 2, points = 0, max_level = 5;
    std::string x, tol, map = "f", maps_spec, out;
    bool json = false, csv = false, junit = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", json, "emit JSON");
        sub->add_option("--out", out, "write output to file");
    };

    auto* sc_params = app.add_subcommand("params", "parameter sequences w_k, eps_k");
    sc_params->add_option("--depth", depth, "sequence depth K")->required();
    add_common(sc_params);

    auto* sc_intervals = app.add_subcommand("intervals", "level family I_k and its measure");
    sc_intervals->add_option("--depth", depth)->required();
    sc_intervals->add_option("--level", level, "level k")->required();
    sc_intervals->add_flag("--csv", csv, "emit CSV");
    add_common(sc_intervals);

    auto* sc_measure = app.add_subcommand("measure", "certified attractor measure brackets");
    sc_measure->add_option("--depth", depth)->required();
    add_common(sc_measure);

    auto* sc_eval = app.add_subcommand("eval", "evaluate the limit map f (or g)");
    sc_eval->add_option("--depth", depth)->required();
    sc_eval->add_option("--x", x, "evaluation point, exact rational")->required();
    sc_eval->add_option("--tol", tol, "tolerance, exact rational");
    sc_eval->add_option("--map", map, "f or g");
    add_common(sc_eval);

    auto* sc_plot = app.add_subcommand("plot", "CSV of f_{k-1} and f_k on the merged grid");
    sc_plot->add_option("--depth", depth)->required();
    sc_plot->add_option("--level", level, "level k >= 1")->required();
    sc_plot->add_option("--points", points, "extra uniform sample points");
    add_common(sc_plot);

    auto* sc_similitude = app.add_subcommand("similitude", "similitude IFS level measures");
    sc_similitude->add_option("--maps", maps_spec, "maps as \"a1,b1;a2,b2;...\"")->required();
    sc_similitude->add_option("--depth", depth)->required();
    add_common(sc_similitude);

    auto* sc_verify = app.add_subcommand("verify", "run the full claim suite");
    sc_verify->add_option("--depth", depth)->required();
    sc_verify->add_option("--max-level", max_level)->required();
    sc_verify->add_flag("--junit", junit, "emit JUnit XML");
    add_common(sc_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (sc_params->parsed()) return run_params(depth, json, out);
    if (sc_intervals->parsed()) return run_intervals(depth, level, json, csv, out);
    if (sc_measure->parsed()) return run_measure(depth, json, out);
    if (sc_eval->parsed()) return run_eval(depth, x, tol, map, json, out);
    if (sc_plot->parsed()) return run_plot(depth, level, points, json, out);
    if (sc_similitude->parsed()) return run_similitude(maps_spec, depth, json, out);
    if (sc_verify->parsed()) return run_verify(depth, max_level, json, junit, out);
    return 2;
}
