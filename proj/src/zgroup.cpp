#include "repshift/zgroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace repshift {

Word freely_reduce(Word w) {
    Word out;
    for (const IndexedLetter& l : w) {
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().family == l.family && out.back().shift == l.shift) {
            out.back().exp += l.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

namespace {

Word word_inverse(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->family, it->shift, -it->exp});
    return out;
}

// -------------------------------------------------------------- parsing ----

struct Cursor {
    const std::string& line;
    int line_no;
    size_t pos = 0;

    void skip_ws() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= line.size();
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_no, static_cast<int>(pos) + 1);
    }
};

bool is_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
}

std::string parse_name(Cursor& c) {
    c.skip_ws();
    size_t start = c.pos;
    while (c.pos < c.line.size() && is_name_char(c.line[c.pos])) ++c.pos;
    if (c.pos == start) c.fail("expected a generator name");
    if (c.line[start] >= '0' && c.line[start] <= '9')
        c.fail("generator name may not start with a digit");
    return c.line.substr(start, c.pos - start);
}

int parse_int(Cursor& c) {
    c.skip_ws();
    size_t start = c.pos;
    if (c.pos < c.line.size() && (c.line[c.pos] == '-' || c.line[c.pos] == '+')) ++c.pos;
    size_t digits = c.pos;
    while (c.pos < c.line.size() && c.line[c.pos] >= '0' && c.line[c.pos] <= '9') ++c.pos;
    if (c.pos == digits) c.fail("expected an integer");
    if (c.pos - start > 7) c.fail("integer too large");
    return std::stoi(c.line.substr(start, c.pos - start));
}

/// Letter: name[int]^int (indexed) or name^int (plain); exponent optional.
IndexedLetter parse_letter(Cursor& c, const std::map<std::string, int>& gen_ids,
                           bool indexed) {
    std::string name = parse_name(c);
    auto it = gen_ids.find(name);
    if (it == gen_ids.end()) c.fail("unknown generator name '" + name + "'");
    IndexedLetter l{it->second, 0, 1};
    if (indexed) {
        c.skip_ws();
        if (c.pos >= c.line.size() || c.line[c.pos] != '[')
            c.fail("expected '[' after family name");
        ++c.pos;
        l.shift = parse_int(c);
        c.skip_ws();
        if (c.pos >= c.line.size() || c.line[c.pos] != ']') c.fail("expected ']'");
        ++c.pos;
    }
    c.skip_ws();
    if (c.pos < c.line.size() && c.line[c.pos] == '^') {
        ++c.pos;
        l.exp = parse_int(c);
        if (l.exp == 0) c.fail("zero exponent");
    }
    return l;
}

Word parse_word(Cursor& c, const std::map<std::string, int>& gen_ids, bool indexed) {
    Word w;
    while (!c.done()) w.push_back(parse_letter(c, gen_ids, indexed));
    if (w.empty()) c.fail("empty word");
    return freely_reduce(std::move(w));
}

std::string letter_str(const IndexedLetter& l, const std::vector<std::string>& names,
                       bool indexed) {
    std::string s = names[l.family];
    if (indexed) s += "[" + std::to_string(l.shift) + "]";
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
    return s;
}

} // namespace

Presentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    enum class Kind { Unknown, Shift, Hnn } kind = Kind::Unknown;
    std::vector<std::string> gens;
    std::map<std::string, int> gen_ids;
    std::vector<Word> relators;         // zgroup form
    std::vector<Word> base_relators;    // hnn form
    std::vector<int> u_gens;
    std::map<int, Word> phi_map;
    int phi_lines = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        Cursor c{raw, line_no};
        if (c.done()) continue;
        std::string head = parse_name(c);
        if (head == "base" && c.line.compare(c.pos, 4, "-rel") == 0) {
            head += "-rel";
            c.pos += 4;
        }

        if (kind == Kind::Unknown) {
            if (head == "zgroup") kind = Kind::Shift;
            else if (head == "hnn") kind = Kind::Hnn;
            else c.fail("expected header 'zgroup' or 'hnn'");
            if (!c.done()) {
                c.skip_ws();
                if (c.pos < c.line.size() && c.line[c.pos] == ';') {
                    // allow the compact one-line form "zgroup; gens a; rel ..."
                    std::string rest = raw.substr(c.pos + 1);
                    std::string expanded;
                    for (char ch : rest) expanded += ch == ';' ? '\n' : ch;
                    std::string tail;
                    std::string remaining((std::istreambuf_iterator<char>(in)),
                                          std::istreambuf_iterator<char>());
                    return parse_presentation(head + "\n" + expanded + "\n" + remaining);
                }
                c.fail("unexpected text after header");
            }
            continue;
        }

        if (head == "gens") {
            if (!gens.empty()) c.fail("duplicate gens line");
            while (!c.done()) {
                std::string name = parse_name(c);
                if (gen_ids.count(name)) c.fail("duplicate generator name '" + name + "'");
                gen_ids.emplace(name, static_cast<int>(gens.size()));
                gens.push_back(name);
            }
            if (gens.empty()) c.fail("empty generator list");
        } else if (head == "rel" && kind == Kind::Shift) {
            if (gens.empty()) c.fail("gens must precede rel");
            relators.push_back(parse_word(c, gen_ids, true));
        } else if (head == "base-rel" && kind == Kind::Hnn) {
            if (gens.empty()) c.fail("gens must precede base-rel");
            base_relators.push_back(parse_word(c, gen_ids, false));
        } else if (head == "U" && kind == Kind::Hnn) {
            if (gens.empty()) c.fail("gens must precede U");
            if (!u_gens.empty()) c.fail("duplicate U line");
            while (!c.done()) {
                std::string name = parse_name(c);
                auto it = gen_ids.find(name);
                if (it == gen_ids.end()) c.fail("unknown generator name '" + name + "'");
                u_gens.push_back(it->second);
            }
        } else if (head == "phi" && kind == Kind::Hnn) {
            std::string name = parse_name(c);
            auto it = gen_ids.find(name);
            if (it == gen_ids.end()) c.fail("unknown generator name '" + name + "'");
            c.skip_ws();
            if (c.line.compare(c.pos, 2, "->") != 0) c.fail("expected '->'");
            c.pos += 2;
            if (phi_map.count(it->second)) c.fail("duplicate phi for '" + name + "'");
            phi_map[it->second] = parse_word(c, gen_ids, false);
            ++phi_lines;
        } else {
            c.fail("unknown directive '" + head + "'");
        }
    }

    if (kind == Kind::Unknown) throw ParseError("empty presentation", line_no, 1);
    if (gens.empty()) throw ParseError("missing gens line", line_no, 1);

    if (kind == Kind::Shift) {
        ZGroupPresentation p;
        p.families = gens;
        p.window = 0;
        for (Word w : relators) {
            int lo = w.front().shift;
            for (const auto& l : w) lo = std::min(lo, l.shift);
            for (auto& l : w) l.shift -= lo;
            int hi = 0;
            for (const auto& l : w) hi = std::max(hi, l.shift);
            p.window = std::max(p.window, hi);
            p.relators.push_back(std::move(w));
        }
        return p;
    }

    HNNData h;
    h.gens = gens;
    h.base_relators = base_relators;
    h.u_gens = u_gens;
    for (int u : u_gens) {
        auto it = phi_map.find(u);
        if (it == phi_map.end())
            throw ParseError("missing phi for U-generator '" + gens[u] + "'", line_no, 1);
        h.phi.push_back(it->second);
    }
    if (phi_lines != static_cast<int>(u_gens.size()))
        throw ParseError("phi given for a generator outside U", line_no, 1);
    return h;
}

std::string pretty_print(const Presentation& p) {
    std::ostringstream out;
    if (const auto* z = std::get_if<ZGroupPresentation>(&p)) {
        out << "zgroup\ngens";
        for (const auto& f : z->families) out << " " << f;
        out << "\n";
        for (const Word& r : z->relators) {
            out << "rel";
            for (const auto& l : r) out << " " << letter_str(l, z->families, true);
            out << "\n";
        }
    } else {
        const auto& h = std::get<HNNData>(p);
        out << "hnn\ngens";
        for (const auto& g : h.gens) out << " " << g;
        out << "\n";
        for (const Word& r : h.base_relators) {
            out << "base-rel";
            for (const auto& l : r) out << " " << letter_str(l, h.gens, false);
            out << "\n";
        }
        out << "U";
        for (int u : h.u_gens) out << " " << h.gens[u];
        out << "\n";
        for (size_t i = 0; i < h.u_gens.size(); ++i) {
            out << "phi " << h.gens[h.u_gens[i]] << " ->";
            for (const auto& l : h.phi[i]) out << " " << letter_str(l, h.gens, false);
            out << "\n";
        }
    }
    return out.str();
}

int window_width(const Presentation& p) {
    if (const auto* z = std::get_if<ZGroupPresentation>(&p)) return z->window;
    return 0;
}

int default_window(const Presentation& p) {
    if (const auto* z = std::get_if<ZGroupPresentation>(&p))
        return z->window == 0 ? 1 : z->window + 1;
    return 1;
}

namespace {

BasePresentation shift_window_base(const ZGroupPresentation& z, int n) {
    int k = z.window;
    if (n < std::max(k, 1))
        throw DomainError("window size " + std::to_string(n) +
                          " is below the presentation window " + std::to_string(k));

    const int f_count = static_cast<int>(z.families.size());
    auto gen_id = [&](int family, int slice) { return slice * f_count + family; };

    BasePresentation b;
    for (int i = 0; i < n; ++i)
        for (int f = 0; f < f_count; ++f)
            b.gens.push_back(z.families[f] + "_" + std::to_string(i));
    for (int f = 0; f < f_count; ++f) b.slice0.push_back(gen_id(f, 0));

    // relator instances fully inside the window
    for (const Word& r : z.relators) {
        int hi = 0;
        for (const auto& l : r) hi = std::max(hi, l.shift);
        for (int s = 0; s + hi <= n - 1; ++s) {
            Word inst;
            for (const auto& l : r) inst.push_back({gen_id(l.family, l.shift + s), 0, l.exp});
            b.relators.push_back(freely_reduce(std::move(inst)));
        }
    }

    if (n >= k + 1) {
        for (int i = 0; i + 1 < n; ++i)
            for (int f = 0; f < f_count; ++f) {
                b.u_gens.push_back(gen_id(f, i));
                b.phi.push_back({{gen_id(f, i + 1), 0, 1}});
            }
        return b;
    }

    // n == k: the boundary relator instances (spanning slices 0..n) must be
    // solved for their slice-n letters so phi can express the next slice.
    std::vector<Word> boundary;
    for (const Word& r : z.relators) {
        int hi = 0;
        for (const auto& l : r) hi = std::max(hi, l.shift);
        if (hi == k) boundary.push_back(r); // single instance, at shift 0
    }

    std::vector<Word> solved(f_count); // per family: slice-n letter as a window word
    std::vector<bool> have(f_count, false);
    std::vector<Word> leftover;
    for (const Word& r : boundary) {
        int top_pos = -1, top_count = 0;
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i].shift == n) { top_pos = static_cast<int>(i); ++top_count; }
        int f = top_pos >= 0 ? r[top_pos].family : -1;
        if (top_count == 1 && std::abs(r[top_pos].exp) == 1 && !have[f]) {
            // r = L g^e R = 1  =>  g = L^-1 R^-1 (e = 1) or g = R L (e = -1)
            Word left(r.begin(), r.begin() + top_pos);
            Word right(r.begin() + top_pos + 1, r.end());
            Word w;
            if (r[top_pos].exp == 1) {
                w = word_inverse(left);
                Word ri = word_inverse(right);
                w.insert(w.end(), ri.begin(), ri.end());
            } else {
                w = right;
                w.insert(w.end(), left.begin(), left.end());
            }
            solved[f] = freely_reduce(std::move(w));
            have[f] = true;
        } else {
            leftover.push_back(r);
        }
    }
    for (int f = 0; f < f_count; ++f)
        if (!have[f])
            throw DomainError(
                "window " + std::to_string(n) + " cannot express the next slice of family '" +
                z.families[f] + "'; use window " + std::to_string(k + 1));

    auto substitute_top = [&](const Word& r) {
        Word out;
        for (const auto& l : r) {
            if (l.shift < n) {
                out.push_back(l);
                continue;
            }
            Word w = solved[l.family];
            if (l.exp < 0) w = word_inverse(w);
            for (int c = 0; c < std::abs(l.exp); ++c)
                out.insert(out.end(), w.begin(), w.end());
        }
        return freely_reduce(std::move(out));
    };
    for (const Word& r : leftover) {
        Word w = substitute_top(r);
        Word w2 = substitute_top(w); // solved words only use slices <= n-1
        if (!w2.empty()) {
            Word inst;
            for (const auto& l : w2) inst.push_back({gen_id(l.family, l.shift), 0, l.exp});
            b.relators.push_back(std::move(inst));
        }
    }

    for (int i = 0; i < n; ++i)
        for (int f = 0; f < f_count; ++f) {
            b.u_gens.push_back(gen_id(f, i));
            if (i + 1 < n) {
                b.phi.push_back({{gen_id(f, i + 1), 0, 1}});
            } else {
                Word img;
                for (const auto& l : solved[f]) img.push_back({gen_id(l.family, l.shift), 0, l.exp});
                b.phi.push_back(freely_reduce(std::move(img)));
            }
        }
    return b;
}

BasePresentation hnn_copies_base(const HNNData& h, int n) {
    if (n < 1) throw DomainError("window size must be at least 1");
    BasePresentation b;
    if (n == 1) {
        b.gens = h.gens;
        b.relators = h.base_relators;
        b.u_gens = h.u_gens;
        b.phi = h.phi;
        for (int g = 0; g < static_cast<int>(h.gens.size()); ++g) b.slice0.push_back(g);
        return b;
    }
    const int g_count = static_cast<int>(h.gens.size());
    auto gen_id = [&](int g, int copy) { return copy * g_count + g; };
    for (int c = 0; c < n; ++c)
        for (int g = 0; g < g_count; ++g)
            b.gens.push_back(h.gens[g] + "_" + std::to_string(c));
    for (int g = 0; g < g_count; ++g) b.slice0.push_back(gen_id(g, 0));

    auto word_at = [&](const Word& w, int copy) {
        Word out;
        for (const auto& l : w) out.push_back({gen_id(l.family, copy), 0, l.exp});
        return out;
    };
    for (int c = 0; c < n; ++c)
        for (const Word& r : h.base_relators) b.relators.push_back(word_at(r, c));
    // amalgamations: u at copy c+1 equals phi(u) at copy c
    for (size_t j = 0; j < h.u_gens.size(); ++j)
        for (int c = 0; c + 1 < n; ++c) {
            Word r{{gen_id(h.u_gens[j], c + 1), 0, 1}};
            Word img = word_inverse(word_at(h.phi[j], c));
            r.insert(r.end(), img.begin(), img.end());
            b.relators.push_back(freely_reduce(std::move(r)));
        }

    for (int c = 0; c + 1 < n; ++c)
        for (int g = 0; g < g_count; ++g) {
            b.u_gens.push_back(gen_id(g, c));
            b.phi.push_back({{gen_id(g, c + 1), 0, 1}});
        }
    for (size_t j = 0; j < h.u_gens.size(); ++j) {
        b.u_gens.push_back(gen_id(h.u_gens[j], n - 1));
        b.phi.push_back(word_at(h.phi[j], n - 1));
    }
    return b;
}

} // namespace

BasePresentation hnn_window_base(const Presentation& p, int n) {
    if (const auto* z = std::get_if<ZGroupPresentation>(&p)) return shift_window_base(*z, n);
    return hnn_copies_base(std::get<HNNData>(p), n);
}

} // namespace repshift
