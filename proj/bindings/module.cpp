// pybind11 surface: the main library operations with text forms (the same
// versioned formats the CLI uses) as the exchange types.

#include "cellweb/gentau.hpp"
#include "cellweb/kl.hpp"
#include "cellweb/rs.hpp"
#include "cellweb/verify.hpp"
#include "cellweb/web.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace cellweb;

namespace {

std::vector<int> to_list(const std::set<int>& s) { return {s.begin(), s.end()}; }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact computations with tableaux, KL cells, and sl3 webs";

    // ---- tableaux and permutations ----
    m.def("tableau_tau", [](const std::string& t) { return to_list(tau(yt_parse(t))); });
    m.def("f_yt", [](int i, int j, const std::string& t) {
        return yt_str(f_yt(i, j, yt_parse(t)));
    });
    m.def("standard_tableaux", [](const std::vector<int>& shape) {
        std::vector<std::string> out;
        for (const auto& t : all_standard_tableaux(shape)) out.push_back(yt_str(t));
        return out;
    });
    m.def("hook_length_count", [](const std::vector<int>& shape) {
        return hook_length_count(shape).str();
    });
    m.def("perm_tau", [](const std::string& x) { return to_list(tau(perm_parse(x))); });

    // ---- robinson-schensted ----
    m.def("rs", [](const std::string& w) {
        auto [p, q] = rs(perm_parse(w));
        return std::make_pair(yt_str(p), yt_str(q));
    });
    m.def("rs_inverse", [](const std::string& p, const std::string& q) {
        return perm_str(rs_inverse(yt_parse(p), yt_parse(q)));
    });

    // ---- webs ----
    m.def("tableau_to_web", [](const std::string& t) {
        return web_str(tableau_to_web(yt_parse(t)));
    });
    m.def("web_to_tableau", [](const std::string& w) {
        return yt_str(web_to_tableau(web_parse(w)));
    });
    m.def("web_yamanouchi", [](const std::string& w) {
        return web_to_yamanouchi(web_parse(w));
    });
    m.def("web_tau", [](const std::string& w) { return to_list(tau_web(web_parse(w))); });
    m.def("f_web", [](int i, int j, const std::string& w) {
        return web_str(f_web(i, j, web_parse(w)));
    });
    m.def(
        "apply_generator",
        [](int i, const std::string& w) {
            WebSumZ s;
            s.add(web_parse(w), 1);
            std::vector<std::pair<std::string, long long>> out;
            for (const auto& [key, wc] : apply_generator(i, s).terms)
                out.emplace_back(web_str(wc.first), wc.second);
            return out;
        },
        "reduced expansion of s_i . W at q = -1, as (web, coefficient) pairs");

    // ---- kazhdan-lusztig ----
    py::class_<KLTable>(m, "KLTable")
        .def(py::init([](int n, int threads, bool force) {
                 return std::make_unique<KLTable>(n, threads, force);
             }),
             py::arg("n"), py::arg("threads") = 0, py::arg("force") = false)
        .def_property_readonly("n", &KLTable::n)
        .def("p",
             [](const KLTable& t, const std::string& y, const std::string& w) {
                 return t.P(t.group().index(perm_parse(y)), t.group().index(perm_parse(w)))
                     .str();
             })
        .def("mu",
             [](const KLTable& t, const std::string& y, const std::string& w) {
                 return t.mu(t.group().index(perm_parse(y)), t.group().index(perm_parse(w)));
             })
        .def("cells", [](const KLTable& t) {
            std::vector<std::pair<std::string, std::vector<std::string>>> out;
            for (const auto& c : left_cells(t)) {
                std::vector<std::string> members;
                for (int w : c.members) members.push_back(perm_str(t.group().elems[w]));
                out.emplace_back(yt_str(c.rightTableau), members);
            }
            return out;
        });

    // ---- generalized tau ----
    m.def(
        "match_webs_tableaux",
        [](int n) {
            MatchResult r = match_across(web_system(n), tableau_system({n, n, n}));
            if (!r.matched) throw std::runtime_error("matching failed: " + r.detail);
            TauSystem webs = web_system(n), tabs = tableau_system({n, n, n});
            std::vector<std::pair<std::string, std::string>> out;
            for (auto [w, t] : r.pairs) out.emplace_back(webs.labels[w], tabs.labels[t]);
            return out;
        },
        "generalized-tau matching of reduced webs (labelled by KK tableau) to tableaux");
    m.def("match_perms_tableaux", [](int n) {
        MatchResult r = match_across(perm_system(n), tableau_system_all(n));
        if (!r.functional) throw std::runtime_error("matching failed: " + r.detail);
        TauSystem perms = perm_system(n), tabs = tableau_system_all(n);
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [x, t] : r.pairs) out.emplace_back(perms.labels[x], tabs.labels[t]);
        return out;
    });

    // ---- verification ----
    m.def("known_checks", &known_checks);
    m.def(
        "verify",
        [](const std::string& check, const std::map<std::string, std::string>& params) {
            VerifyReport r = run_check(check, params);
            py::dict out;
            out["check"] = r.check;
            out["pass"] = r.pass;
            out["payload"] = r.payload;
            out["seconds"] = r.seconds;
            return out;
        },
        py::arg("check"), py::arg("params") = std::map<std::string, std::string>{});
}
