// cellweb: command-line surface over the library.  All stdout output is
// machine-readable (TSV or JSON-lines); diagrams only via `render`.

#include "CLI11.hpp"

#include "cellweb/gentau.hpp"
#include "cellweb/kl.hpp"
#include "cellweb/render.hpp"
#include "cellweb/rs.hpp"
#include "cellweb/verify.hpp"
#include "cellweb/web.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cellweb;

namespace {

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

TauSystem make_system(const std::string& desc, int n, int threads) {
    auto colon = desc.find(':');
    std::string kind = desc.substr(0, colon == std::string::npos ? desc.size() : colon);
    std::string rest = colon == std::string::npos ? "" : desc.substr(colon + 1);
    if (kind == "perms") return perm_system(n);
    if (kind == "tableaux") {
        if (rest == "all" || rest.empty()) return tableau_system_all(n);
        std::vector<int> shape;
        std::istringstream in(rest);
        std::string tok;
        while (std::getline(in, tok, ',')) shape.push_back(std::stoi(tok));
        return tableau_system(shape);
    }
    if (kind == "webs") return web_system(rest.empty() ? n : std::stoi(rest));
    if (kind == "klcell") {
        auto second = rest.find(':');
        if (second == std::string::npos)
            throw CLI::ValidationError("klcell wants klcell:<n>:<Q-tableau>");
        int kn = std::stoi(rest.substr(0, second));
        StandardTableau q = yt_parse(rest.substr(second + 1));
        static std::map<int, KLTable> cache; // keep tables across both sides of a match
        auto it = cache.find(kn);
        if (it == cache.end()) it = cache.emplace(kn, KLTable(kn, threads)).first;
        for (const auto& cell : left_cells(it->second))
            if (cell.rightTableau == q) return klcell_system(it->second, cell);
        throw CLI::ValidationError("no cell with Q-tableau " + yt_str(q));
    }
    throw CLI::ValidationError("unknown system: " + desc +
                               " (want perms | tableaux[:<shape>|:all] | webs:<n> | klcell:<n>:<Q>)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of tableaux, KL cells, and sl3 webs"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();

    // ---- rs ----
    std::string rs_word;
    auto* rs_cmd = app.add_subcommand("rs", "Robinson-Schensted insertion");
    rs_cmd->add_option("permutation", rs_word, "one-line notation, e.g. 54312")->required();

    // ---- kl ----
    auto* kl_cmd = app.add_subcommand("kl", "Kazhdan-Lusztig tables, cells, actions");
    kl_cmd->require_subcommand(1);
    int kl_n = 3;
    bool kl_force = false;
    std::string kl_save, kl_load;
    auto* kl_table = kl_cmd->add_subcommand("table", "print all nontrivial P_{y,w} and mu");
    kl_table->add_option("n", kl_n)->required();
    kl_table->add_flag("--force", kl_force, "override the resource guard");
    kl_table->add_option("--save", kl_save, "write the table cache to a file");
    kl_table->add_option("--load", kl_load, "read a table cache instead of recomputing");
    int cells_n = 3;
    bool cells_force = false;
    auto* kl_cells = kl_cmd->add_subcommand("cells", "left cells with their Q-tableaux");
    kl_cells->add_option("n", cells_n)->required();
    kl_cells->add_flag("--force", cells_force, "override the resource guard");
    int act_n = 3, act_i = 1;
    std::string act_w;
    auto* kl_act = kl_cmd->add_subcommand("act", "T_{s_i} . C_w in the cell basis");
    kl_act->add_option("n", act_n)->required();
    kl_act->add_option("i", act_i)->required();
    kl_act->add_option("w", act_w, "one-line notation")->required();

    // ---- web ----
    auto* web_cmd = app.add_subcommand("web", "sl3 web construction, actions, search");
    web_cmd->require_subcommand(1);
    std::string wt_tableau;
    auto* web_from = web_cmd->add_subcommand("from-tableau", "build the web of an [n,n,n] tableau");
    web_from->add_option("tableau", wt_tableau, "rows joined by '/', e.g. 1,2,5/3,4,7/6,8,9")
        ->required();
    std::string wy_file;
    auto* web_yam = web_cmd->add_subcommand("yamanouchi", "depth word and tableau of a web");
    web_yam->add_option("webfile", wy_file, "web file ('-' for stdin)")->required();
    std::string wa_word, wa_file, wa_mode = "symmetric";
    auto* web_act = web_cmd->add_subcommand("act", "apply a generator word (rightmost first)");
    web_act->add_option("word", wa_word, "comma-separated generator indices, e.g. 2,1")->required();
    web_act->add_option("webfile", wa_file, "web file ('-' for stdin)")->required();
    web_act->add_option("--mode", wa_mode, "symmetric (q=-1) or hecke")->capture_default_str();
    int sn_n = 6;
    long long sn_limit = -1;
    auto* web_search = web_cmd->add_subcommand("search-negative", "scan for negative coefficients");
    web_search->add_option("n", sn_n)->required();
    web_search->add_option("--limit", sn_limit, "stop after this many hits (-1 = scan all)");

    // ---- gentau ----
    auto* gt_cmd = app.add_subcommand("gentau", "generalized tau-invariant matching");
    gt_cmd->require_subcommand(1);
    std::string gt_a, gt_b;
    int gt_n = 0;
    auto* gt_match = gt_cmd->add_subcommand("match", "match two systems through tau_g");
    gt_match->add_option("systemA", gt_a)->required();
    gt_match->add_option("systemB", gt_b)->required();
    gt_match->add_option("--n", gt_n, "generator rank for perms/tableaux systems");

    // ---- verify ----
    std::string vf_check;
    int vf_n = -1;
    auto* vf_cmd = app.add_subcommand("verify", "run a named invariant suite");
    vf_cmd->add_option("check", vf_check)->required();
    vf_cmd->add_option("--n", vf_n, "scale parameter for the check");

    // ---- render ----
    auto* rd_cmd = app.add_subcommand("render", "diagram export (DOT/SVG)");
    rd_cmd->require_subcommand(1);
    std::string rdw_file, rdw_format = "svg";
    bool rdw_depths = false;
    auto* rd_web = rd_cmd->add_subcommand("web", "render a web file ('empty' for a blank canvas)");
    rd_web->add_option("webfile", rdw_file)->required();
    rd_web->add_option("--format", rdw_format, "dot or svg")->capture_default_str();
    rd_web->add_flag("--depths", rdw_depths, "annotate faces with their depths (svg)");
    std::string rdt_tableau, rdt_format = "svg";
    auto* rd_tab = rd_cmd->add_subcommand("tableau", "render a tableau grid");
    rd_tab->add_option("tableau", rdt_tableau)->required();
    rd_tab->add_option("--format", rdt_format, "dot or svg")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*rs_cmd) {
            auto [P, Q] = rs(perm_parse(rs_word));
            std::cout << "P\t" << yt_str(P) << "\n";
            std::cout << "Q\t" << yt_str(Q) << "\n";
        } else if (*kl_table) {
            KLTable t = [&] {
                if (!kl_load.empty()) {
                    std::ifstream in(kl_load);
                    if (!in) throw std::runtime_error("cannot open cache: " + kl_load);
                    return KLTable::load(in);
                }
                return KLTable(kl_n, threads, kl_force);
            }();
            if (!kl_save.empty()) {
                std::ofstream out(kl_save);
                t.save(out);
            }
            const auto& G = t.group();
            for (int w = 0; w < G.size(); ++w)
                for (int y = 0; y < G.size(); ++y) {
                    if (!t.leq(y, w) || y == w) continue;
                    LaurentPoly p = t.P(y, w);
                    if (!p.is_one())
                        std::cout << "P\t" << perm_str(G.elems[y]) << "\t" << perm_str(G.elems[w])
                                  << "\t" << p.str() << "\n";
                }
            for (int w = 0; w < G.size(); ++w)
                for (auto [y, m] : t.mu_down(w))
                    std::cout << "mu\t" << perm_str(G.elems[y]) << "\t" << perm_str(G.elems[w])
                              << "\t" << m << "\n";
        } else if (*kl_cells) {
            KLTable t(cells_n, threads, cells_force);
            auto cells = left_cells(t);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                std::cout << "cell\t" << c << "\t" << yt_str(cells[c].rightTableau) << "\t";
                for (std::size_t k = 0; k < cells[c].members.size(); ++k)
                    std::cout << (k ? "," : "") << perm_str(t.group().elems[cells[c].members[k]]);
                std::cout << "\n";
            }
        } else if (*kl_act) {
            KLTable t(act_n, threads);
            int w = t.group().index(perm_parse(act_w));
            auto cells = left_cells(t);
            for (const auto& cell : cells) {
                if (!std::binary_search(cell.members.begin(), cell.members.end(), w)) continue;
                for (auto [y, coeff] : ts_action_on_cell(t, cell, act_i, w))
                    std::cout << "term\t" << perm_str(t.group().elems[y]) << "\t" << coeff.str()
                              << "\n";
                break;
            }
        } else if (*web_from) {
            std::cout << web_str(tableau_to_web(yt_parse(wt_tableau)));
        } else if (*web_yam) {
            Web w = web_parse(read_all(wy_file));
            YamanouchiWord word = web_to_yamanouchi(w);
            std::cout << "word\t" << word << "\n";
            std::cout << "tableau\t" << yt_str(yamanouchi_to_tableau(word)) << "\n";
            std::cout << "tau\t";
            bool first = true;
            for (int i : tau_web(w)) {
                std::cout << (first ? "" : ",") << i;
                first = false;
            }
            std::cout << "\n";
        } else if (*web_act) {
            Web w = web_parse(read_all(wa_file));
            std::vector<int> word;
            std::istringstream in(wa_word);
            std::string tok;
            while (std::getline(in, tok, ',')) word.push_back(std::stoi(tok));
            if (wa_mode == "symmetric") {
                WebSumZ s;
                s.add(w, 1);
                for (auto it = word.rbegin(); it != word.rend(); ++it)
                    s = apply_generator(*it, s);
                for (const auto& [key, wc] : s.terms)
                    std::cout << "{\"coeff\":" << wc.second << ",\"tableau\":\""
                              << yt_str(web_to_tableau(wc.first)) << "\",\"web\":\""
                              << json_escape(web_str(wc.first)) << "\"}\n";
            } else if (wa_mode == "hecke") {
                WebSum s;
                s.add(w, LaurentPoly(1));
                for (auto it = word.rbegin(); it != word.rend(); ++it)
                    s = apply_generator_hecke(*it, s);
                for (const auto& [key, wc] : s.terms)
                    std::cout << "{\"coeff\":\"" << json_escape(wc.second.str())
                              << "\",\"tableau\":\"" << yt_str(web_to_tableau(wc.first))
                              << "\",\"web\":\"" << json_escape(web_str(wc.first)) << "\"}\n";
            } else {
                throw CLI::ValidationError("unknown mode: " + wa_mode);
            }
        } else if (*web_search) {
            long long seen = 0;
            if (sn_limit < 0) {
                find_negative_coefficient(sn_n, threads, [&](const NegativeTerm& h) {
                    std::cout << "hit\t" << yt_str(h.source) << "\t" << h.generator << "\t"
                              << h.coeff << "\n";
                    if (++seen % 16 == 0) std::cerr << "hits so far: " << seen << "\n";
                });
            } else {
                for (const auto& h : find_negative_coefficient(sn_n, threads, (std::size_t)sn_limit))
                    std::cout << "hit\t" << yt_str(h.source) << "\t" << h.generator << "\t"
                              << h.coeff << "\n";
            }
        } else if (*gt_match) {
            TauSystem a = make_system(gt_a, gt_n, threads);
            TauSystem b = make_system(gt_b, gt_n, threads);
            MatchResult r = match_across(a, b);
            std::cout << "matched\t" << (r.matched ? "true" : "false") << "\torder\t"
                      << r.stable_order << "\n";
            if (!r.detail.empty()) std::cout << "detail\t" << r.detail << "\n";
            for (auto [x, y] : r.pairs)
                std::cout << "pair\t" << a.labels[x] << "\t" << b.labels[y] << "\n";
            return r.functional ? 0 : 1;
        } else if (*vf_cmd) {
            std::map<std::string, std::string> params;
            if (vf_n >= 0) params["n"] = std::to_string(vf_n);
            if (threads > 0) params["threads"] = std::to_string(threads);
            VerifyReport r = run_check(vf_check, params);
            std::cout << "check\t" << r.check << "\n";
            std::cout << "result\t" << (r.pass ? "pass" : "fail") << "\n";
            std::cout << "payload\t" << r.payload << "\n";
            std::cout << "seconds\t" << r.seconds << "\n";
            return r.pass ? 0 : 1;
        } else if (*rd_web) {
            Web w = rdw_file == "empty" ? Web{} : web_parse(read_all(rdw_file));
            std::cout << (rdw_format == "dot" ? web_to_dot(w) : web_to_svg(w, rdw_depths));
        } else if (*rd_tab) {
            StandardTableau t = yt_parse(rdt_tableau);
            std::cout << (rdt_format == "dot" ? tableau_to_dot(t) : tableau_to_svg(t));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
