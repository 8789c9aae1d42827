#include "ectcert/problem.hpp"

#include "ectcert/parser.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ect {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

struct Entry {
    std::string value;
    std::size_t line = 0;
    bool used = false;
};

using Section = std::map<std::string, Entry>;

[[noreturn]] void fail(const std::string& where, std::size_t line, const std::string& msg) {
    throw ProblemError(where + ":" + std::to_string(line) + ": " + msg);
}

unsigned long parse_positive_integer(const std::string& where, const Entry& e,
                                     const std::string& key) {
    const std::string& v = e.value;
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
        fail(where, e.line, key + " must be a positive integer, got '" + v + "'");
    unsigned long r = 0;
    try {
        r = std::stoul(v);
    } catch (const std::out_of_range&) {
        fail(where, e.line, key + " is out of range");
    }
    if (r == 0) fail(where, e.line, key + " must be positive");
    return r;
}

}  // namespace

ProblemFile parse_problem_text(const std::string& text, const std::string& where) {
    static const std::set<std::string> known_sections = {"problem", "hamiltonian", "family",
                                                         "interval", "options"};
    static const std::map<std::string, std::set<std::string>> known_keys = {
        {"problem", {"name"}},
        {"hamiltonian", {"A", "B", "m", "Psi"}},
        {"family", {}},  // s, g, f0..f{n-1}: validated specially
        {"interval", {"x_left", "x_right", "y_right", "h_max"}},
        {"options", {"q", "preprocess", "numeric_branch_filter"}},
    };

    std::map<std::string, Section> sections;
    std::map<std::string, std::size_t> section_line;
    {
        std::istringstream in(text);
        std::string line, current;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string t = trim(line);
            if (t.empty() || t[0] == '#' || t[0] == ';') continue;
            if (t.front() == '[') {
                if (t.back() != ']') fail(where, lineno, "unterminated section header");
                current = trim(t.substr(1, t.size() - 2));
                if (!known_sections.count(current))
                    fail(where, lineno, "unknown section [" + current + "]");
                if (sections.count(current))
                    fail(where, lineno, "duplicate section [" + current + "]");
                sections[current];
                section_line[current] = lineno;
                continue;
            }
            if (current.empty()) fail(where, lineno, "key outside any section");
            std::size_t eq = t.find('=');
            if (eq == std::string::npos) fail(where, lineno, "expected key = value");
            std::string key = trim(t.substr(0, eq));
            std::string val = trim(t.substr(eq + 1));
            if (key.empty()) fail(where, lineno, "empty key");
            if (val.empty()) fail(where, lineno, "empty value for key '" + key + "'");
            if (current != "family" && !known_keys.at(current).count(key))
                fail(where, lineno, "unknown key '" + key + "' in section [" + current + "]");
            if (sections[current].count(key))
                fail(where, lineno, "duplicate key '" + key + "' in section [" + current + "]");
            sections[current][key] = Entry{val, lineno, false};
        }
    }

    for (const char* required : {"problem", "hamiltonian", "family", "interval"})
        if (!sections.count(required))
            throw ProblemError(where + ": missing required section [" + std::string(required) + "]");

    auto get = [&](const std::string& sec, const std::string& key) -> Entry* {
        auto s = sections.find(sec);
        if (s == sections.end()) return nullptr;
        auto k = s->second.find(key);
        if (k == s->second.end()) return nullptr;
        k->second.used = true;
        return &k->second;
    };
    auto require = [&](const std::string& sec, const std::string& key) -> Entry& {
        Entry* e = get(sec, key);
        if (!e)
            throw ProblemError(where + ": missing required key '" + key + "' in section [" + sec +
                               "]");
        return *e;
    };

    ProblemFile pf;
    pf.name = require("problem", "name").value;

    const Entry& eA = require("hamiltonian", "A");
    pf.H.A = parse_ratfunc(eA.value, "x");
    pf.H.m = static_cast<unsigned>(parse_positive_integer(where, require("hamiltonian", "m"), "m"));
    if (Entry* eB = get("hamiltonian", "B")) pf.H.B = parse_ratfunc(eB->value, "x");
    if (Entry* ePsi = get("hamiltonian", "Psi")) pf.H.Psi = parse_ratfunc(ePsi->value, "y");
    pf.separated = pf.H.Psi.has_value();
    if (pf.separated && pf.H.B)
        fail(where, eA.line, "B and Psi are mutually exclusive (quadratic vs separated mode)");
    if (!pf.separated && !pf.H.B)
        fail(where, eA.line, "quadratic mode requires B (or supply Psi for separated mode)");

    // family: f0..f{n-1} contiguous, plus s (quadratic) or g (separated)
    {
        Section& famsec = sections["family"];
        for (auto& [key, entry] : famsec) {
            bool ok = key == "s" || key == "g" ||
                      (key.size() > 1 && key[0] == 'f' &&
                       key.find_first_not_of("0123456789", 1) == std::string::npos);
            if (!ok) fail(where, entry.line, "unknown key '" + key + "' in section [family]");
        }
        std::size_t n = 0;
        while (famsec.count("f" + std::to_string(n))) ++n;
        if (n == 0)
            throw ProblemError(where + ": section [family] must define f0, f1, ... contiguously");
        for (auto& [key, entry] : famsec) {
            if (key[0] == 'f' && key != "f" && !entry.used) {
                std::size_t idx = std::stoul(key.substr(1));
                if (idx >= n)
                    fail(where, entry.line,
                         "family keys must be contiguous: f" + std::to_string(n) + " is missing");
            }
        }
        pf.fam.f.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Entry& e = require("family", "f" + std::to_string(i));
            pf.fam.f.push_back(parse_ratfunc(e.value, "x"));
        }
        if (pf.separated) {
            pf.fam.g = parse_ratfunc(require("family", "g").value, "y");
            pf.fam.s = 1;
            if (Entry* es = get("family", "s"))
                fail(where, es->line, "key 's' belongs to quadratic mode; separated mode takes g");
        } else {
            pf.fam.s = static_cast<unsigned>(
                parse_positive_integer(where, require("family", "s"), "s"));
            if (Entry* eg = get("family", "g"))
                fail(where, eg->line, "key 'g' belongs to separated mode; quadratic mode takes s");
        }
    }

    // interval
    {
        const Entry& el = require("interval", "x_left");
        pf.interval.x_left = parse_surd(el.value);
        const Entry& er = require("interval", "x_right");
        if (trim(er.value) == "inf" || trim(er.value) == "+inf")
            pf.interval.x_right = Endpoint::pos_inf();
        else
            pf.interval.x_right = Endpoint::finite(parse_surd(er.value));
        if (Entry* ey = get("interval", "y_right")) {
            if (!pf.separated)
                fail(where, ey->line, "y_right is only meaningful in separated mode");
            pf.y_right = parse_surd(ey->value);
        } else if (pf.separated) {
            throw ProblemError(where + ": separated mode requires y_right in [interval]");
        }
        if (Entry* eh = get("interval", "h_max")) pf.H.h_max = parse_surd(eh->value);
    }

    // options
    if (Entry* eq = get("options", "q")) {
        BiRat qh = parse_birat(eq->value, "x", "z");
        if (!(qh.d == BiQ(Rat(1)))) fail(where, eq->line, "q hint must be a polynomial in x, z");
        pf.options.q_hint = qh.n;
    }
    if (Entry* ep = get("options", "preprocess")) {
        if (ep->value == "auto")
            pf.options.preprocess_auto = true;
        else if (ep->value == "none")
            pf.options.preprocess_auto = false;
        else
            fail(where, ep->line, "preprocess must be 'auto' or 'none'");
    }
    if (Entry* en = get("options", "numeric_branch_filter")) {
        if (en->value == "on")
            pf.options.numeric_branch_filter = true;
        else if (en->value == "off")
            pf.options.numeric_branch_filter = false;
        else
            fail(where, en->line, "numeric_branch_filter must be 'on' or 'off'");
    }

    return pf;
}

ProblemFile parse_problem_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ProblemError("cannot open problem file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str(), path);
}

}  // namespace ect
