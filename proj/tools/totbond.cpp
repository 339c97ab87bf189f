// Command-line front end. Every subcommand takes graphs from a file (graph6, edge list or
// planar_code; "-" reads stdin) or a generator spec such as cycle:3..12, and prints one JSON
// record per graph on stdout.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "totbond/totbond.hpp"

using namespace totbond;

namespace {

struct Input {
    std::string source;
    std::string format;
};

void add_input(CLI::App* cmd, Input& in) {
    cmd->add_option("input", in.source, "graph file, '-' for stdin, or a generator spec")->required();
    cmd->add_option("--format", in.format, "graph6 | edge-list | planar_code (default: sniffed)");
}

std::vector<CorpusItem> load(const Input& in) {
    std::optional<GraphFormat> f;
    if (!in.format.empty()) {
        f = format_from_name(in.format);
        if (!f) throw InputError("unknown format " + in.format);
    }
    if (in.source == "-") return read_corpus_stream(std::cin, "stdin", f);
    if (f) return read_corpus_file(in.source, f);
    return load_corpus(in.source);
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

std::vector<Vertex> parse_vertices(const std::string& s) {
    std::vector<Vertex> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (...) {
            throw InputError("bad vertex id '" + tok + "'");
        }
    }
    return out;
}

Embedding embedding_for(const CorpusItem& it) {
    if (it.embedding) {
        if (!is_plane_embedding(it.graph, *it.embedding)) throw InputError(it.id + ": supplied rotation system is not a plane embedding");
        return *it.embedding;
    }
    auto pr = planarity(it.graph);
    if (!pr.planar) throw InputError(it.id + ": graph is not planar");
    return *pr.embedding;
}

Json header(const CorpusItem& it) { return graph_header(it.id, it.graph); }

void print_summary(const CampaignResult& r) {
    std::cerr << r.tag << " on " << r.corpus << ": considered " << r.considered << ", filtered " << r.filtered() << ", checked "
              << r.checked << " (holds " << r.holds << ", violations " << r.violations.size() << ", skipped " << r.skipped << ")\n";
    for (const auto& [k, v] : r.filtered_reasons) std::cerr << "  filtered  " << k << ": " << v << '\n';
    for (const auto& [k, v] : r.skipped_reasons) std::cerr << "  skipped   " << k << ": " << v << '\n';
    for (const auto& [k, v] : r.counters) std::cerr << "  counter   " << k << ": " << v << '\n';
    for (const auto& v : r.violations) std::cerr << "  VIOLATION " << v["id"].get<std::string>() << " " << v["graph6"].get<std::string>() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Total domination and total bondage toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "write graphs from a generator spec");
    std::string gen_spec;
    std::string gen_format = "graph6";
    gen->add_option("spec", gen_spec, "e.g. trees:5..8, cycle:3..12, kpartite:3,2,2, named:petersen")->required();
    gen->add_option("--format", gen_format, "graph6 | edge-list | planar_code");

    // gamma-t
    auto* gt = app.add_subcommand("gamma-t", "total domination number with a minimum total dominating set");
    Input gt_in;
    add_input(gt, gt_in);

    // bondage
    auto* bd = app.add_subcommand("bondage", "exact total bondage number with certificate");
    Input bd_in;
    std::optional<int> bd_cap;
    std::optional<long long> bd_budget;
    bool bd_no_matching = false;
    add_input(bd, bd_in);
    bd->add_option("--cap", bd_cap, "largest |B| to try (default min(m, Delta+9))");
    bd->add_option("--budget", bd_budget, "search node budget");
    bd->add_flag("--no-matching", bd_no_matching, "decide infinity by exhaustion instead of the matching criterion");

    // witness
    auto* wt = app.add_subcommand("witness", "build and validate lemma edge sets");
    Input wt_in;
    std::string wt_rule;
    std::string wt_anchors;
    bool wt_scan = false;
    bool wt_all = false;
    add_input(wt, wt_in);
    wt->add_option("--rule", wt_rule, "triangle | cycle4 | cycle5 | deg3-dist2 | deg2-dist3 | multipartite");
    wt->add_option("--anchors", wt_anchors, "comma-separated anchor vertices (default: first qualifying)");
    wt->add_flag("--all", wt_all, "every qualifying anchor of --rule");
    wt->add_flag("--scan", wt_scan, "every rule on every anchor");

    // detect
    auto* dt = app.add_subcommand("detect", "unavoidable configurations of planar graphs");
    Input dt_in;
    std::string dt_rules = "borodin,g4";
    std::string dt_reading = "at-most";
    add_input(dt, dt_in);
    dt->add_option("--rules", dt_rules, "borodin, g4 or both");
    dt->add_option("--reading", dt_reading, "degree reading for (a,b)-edges: at-most | exact | both");

    // discharge
    auto* dc = app.add_subcommand("discharge", "balanced charging and rule R with exact charges");
    Input dc_in;
    add_input(dc, dc_in);

    // campaign
    auto* cp = app.add_subcommand("campaign", "check one theorem over a corpus");
    std::string cp_tag;
    std::string cp_corpus;
    std::optional<int> cp_cap;
    std::optional<int> cp_jobs;
    std::optional<long long> cp_budget;
    bool cp_quiet = false;
    cp->add_option("--theorem", cp_tag, "campaign tag, e.g. thm-tree-n23 or thm-planar-d8")->required();
    cp->add_option("--corpus", cp_corpus, "graph file or generator spec")->required();
    cp->add_option("--cap", cp_cap, "ceiling on |B| for the solver");
    cp->add_option("--jobs", cp_jobs, "worker threads (default TOTBOND_JOBS or 1)");
    cp->add_option("--budget", cp_budget, "solver node budget per graph");
    cp->add_flag("--quiet", cp_quiet, "print only the summary record");

    // search
    auto* sr = app.add_subcommand("search", "graphs whose total bondage number equals k");
    int sr_k = 0;
    std::string sr_corpus;
    std::optional<int> sr_jobs;
    sr->add_option("--bt", sr_k, "target value")->required();
    sr->add_option("--corpus", sr_corpus, "graph file or generator spec")->required();
    sr->add_option("--jobs", sr_jobs, "worker threads (default TOTBOND_JOBS or 1)");

    // bounds
    auto* bn = app.add_subcommand("bounds", "earlier general and tree bounds with the certified value");
    Input bn_in;
    add_input(bn, bn_in);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            auto f = format_from_name(gen_format);
            if (!f) throw InputError("unknown format " + gen_format);
            auto items = load_corpus(gen_spec);
            if (*f == GraphFormat::planar_code) write_planar_code_header(std::cout);
            for (const auto& it : items) {
                switch (*f) {
                    case GraphFormat::graph6: write_graph6(std::cout, it.graph); break;
                    case GraphFormat::edge_list: write_edge_list(std::cout, it.graph); break;
                    case GraphFormat::planar_code: write_planar_code(std::cout, it.graph, embedding_for(it)); break;
                }
            }
            return 0;
        }
        if (gt->parsed()) {
            for (const auto& it : load(gt_in)) {
                Json j = header(it);
                if (has_isolated_vertex(it.graph) || it.graph.order() == 0) {
                    j["gamma_t"] = nullptr;
                    j["error"] = "graph has an isolated vertex";
                } else {
                    auto c = gamma_t(it.graph);
                    j["gamma_t"] = c.gamma_t;
                    j["witness"] = c.witness.to_vector();
                }
                emit(j);
            }
            return 0;
        }
        if (bd->parsed()) {
            BondageOptions o;
            o.cap = bd_cap;
            o.node_budget = bd_budget;
            o.use_matching_criterion = !bd_no_matching;
            for (const auto& it : load(bd_in)) {
                Json j = header(it);
                if (has_isolated_vertex(it.graph) || it.graph.order() == 0) {
                    j["bt"] = nullptr;
                    j["error"] = "graph has an isolated vertex";
                } else {
                    j["bt"] = to_json(bondage(it.graph, o));
                }
                emit(j);
            }
            return 0;
        }
        if (wt->parsed()) {
            if (wt_scan == !wt_rule.empty()) throw InputError("witness needs exactly one of --rule or --scan");
            std::optional<WitnessRule> rule;
            if (!wt_scan) {
                rule = witness_rule_from_name(wt_rule);
                if (!rule) throw InputError("unknown rule " + wt_rule);
            }
            for (const auto& it : load(wt_in)) {
                std::vector<WitnessReport> reports;
                if (wt_scan) {
                    reports = scan_witnesses(it.graph);
                } else if (!wt_anchors.empty()) {
                    reports.push_back(build_witness(it.graph, *rule, parse_vertices(wt_anchors)));
                } else if (wt_all && *rule != WitnessRule::multipartite) {
                    for (const auto& a : find_anchors(it.graph, *rule)) reports.push_back(build_witness(it.graph, *rule, a));
                } else {
                    reports.push_back(first_witness(it.graph, *rule));
                }
                for (const auto& r : reports) {
                    Json j = header(it);
                    j["report"] = to_json(r);
                    emit(j);
                }
            }
            return 0;
        }
        if (dt->parsed()) {
            const bool borodin = dt_rules.find("borodin") != std::string::npos;
            const bool g4 = dt_rules.find("g4") != std::string::npos;
            if (!borodin && !g4) throw InputError("--rules must name borodin and/or g4");
            std::vector<DegreeReading> readings;
            if (dt_reading == "at-most" || dt_reading == "both") readings.push_back(DegreeReading::at_most);
            if (dt_reading == "exact" || dt_reading == "both") readings.push_back(DegreeReading::exact);
            if (readings.empty()) throw InputError("unknown reading " + dt_reading);
            for (const auto& it : load(dt_in)) {
                Json j = header(it);
                auto dump = [](const ConfigurationReport& r) {
                    Json x;
                    x["found"] = r.found();
                    Json hits = Json::array();
                    for (const auto& h : r.hits) hits.push_back(to_json(h));
                    x["hits"] = std::move(hits);
                    return x;
                };
                if (borodin) {
                    Embedding emb = embedding_for(it);
                    for (auto rd : readings) j["borodin_" + to_string(rd)] = dump(detect_borodin(it.graph, emb, rd));
                }
                if (g4) j["g4"] = dump(detect_girth4_config(it.graph));
                emit(j);
            }
            return 0;
        }
        if (dc->parsed()) {
            for (const auto& it : load(dc_in)) {
                Json j = header(it);
                auto ledger = discharge_audit(it.graph, embedding_for(it));
                j["ledger"] = to_json(ledger);
                j["any_negative"] = ledger.any_negative();
                emit(j);
            }
            return 0;
        }
        if (cp->parsed()) {
            auto tag = campaign_tag_from_name(cp_tag);
            if (!tag) throw InputError("unknown campaign tag " + cp_tag);
            CampaignLimits lim;
            lim.cap = cp_cap;
            lim.jobs = cp_jobs.value_or(jobs_from_env(1));
            if (cp_budget) lim.node_budget = *cp_budget;
            auto res = run_campaign(*tag, cp_corpus, lim, [&](const Json& j) {
                if (!cp_quiet) {
                    emit(j);
                    std::cout.flush();
                }
            });
            emit(res.summary());
            print_summary(res);
            return res.violations.empty() ? 0 : 1;
        }
        if (sr->parsed()) {
            CampaignLimits lim;
            lim.jobs = sr_jobs.value_or(jobs_from_env(1));
            auto s = search_by_bondage(load_corpus(sr_corpus), sr_k, lim, emit);
            emit(s.to_json());
            return 0;
        }
        if (bn->parsed()) {
            for (const auto& it : load(bn_in)) {
                Json j = header(it);
                j["prior_bounds"] = to_json(verify_prior_bounds(it.graph));
                emit(j);
            }
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
