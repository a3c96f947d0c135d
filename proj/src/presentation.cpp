#include "foxjump/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace foxjump {

Word free_reduce(const std::vector<Syllable>& raw) {
    // Stack-based reduction: each incoming syllable either merges with the
    // top of the stack or is pushed; a merge to zero pops, exposing the
    // previous syllable for the next merge.
    std::vector<Syllable> out;
    out.reserve(raw.size());
    for (const auto& s : raw) {
        if (s.exponent == 0) continue;
        if (!out.empty() && out.back().generator == s.generator) {
            out.back().exponent += s.exponent;
            if (out.back().exponent == 0) out.pop_back();
        } else {
            out.push_back(s);
        }
    }
    Word w;
    w.syllables_ = std::move(out);
    return w;
}

Word::Word(std::vector<Syllable> raw) : syllables_(free_reduce(raw).syllables_) {}

std::int64_t Word::exponent_sum(std::size_t generator) const {
    std::int64_t total = 0;
    for (const auto& s : syllables_)
        if (s.generator == generator) total += s.exponent;
    return total;
}

Word Word::inverse() const {
    std::vector<Syllable> out(syllables_.rbegin(), syllables_.rend());
    for (auto& s : out) s.exponent = -s.exponent;
    return free_reduce(out);
}

Word operator*(const Word& a, const Word& b) {
    auto raw = a.syllables_;
    raw.insert(raw.end(), b.syllables_.begin(), b.syllables_.end());
    return free_reduce(raw);
}

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relations)
    : names_(std::move(generator_names)), relations_(std::move(relations)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw std::invalid_argument("empty generator name");
        if (std::isdigit(static_cast<unsigned char>(n.front())))
            throw std::invalid_argument("generator name starts with a digit: " + n);
        if (std::any_of(n.begin(), n.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '^'; }))
            throw std::invalid_argument("generator name contains whitespace or caret: " + n);
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name: " + n);
    }
    for (const auto& r : relations_)
        for (const auto& s : r.syllables())
            if (s.generator >= names_.size()) throw std::invalid_argument("relation uses an undeclared generator");
}

std::size_t Presentation::generator_index(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw std::out_of_range("unknown generator: " + std::string(name));
    return static_cast<std::size_t>(it - names_.begin());
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

bool is_name_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '^' && c != '#' && c != ':';
}

struct LineCursor {
    std::string_view text;
    std::size_t line;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() const { return pos >= text.size(); }
    std::size_t column() const { return pos + 1; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line, column()); }

    std::string_view name() {
        const auto start = pos;
        while (pos < text.size() && is_name_char(text[pos])) ++pos;
        if (pos == start) fail("expected a generator name");
        if (std::isdigit(static_cast<unsigned char>(text[start]))) {
            pos = start;
            fail("generator name may not start with a digit");
        }
        return text.substr(start, pos - start);
    }
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
    std::vector<std::string> names;
    std::vector<Word> relations;
    bool have_gens = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        LineCursor cur{line, line_no};
        cur.skip_space();
        if (cur.done()) {
            if (end == text.size()) break;
            continue;
        }
        const auto kw_start = cur.pos;
        while (!cur.done() && line[cur.pos] != ':' && !std::isspace(static_cast<unsigned char>(line[cur.pos]))) ++cur.pos;
        const auto keyword = line.substr(kw_start, cur.pos - kw_start);
        if (cur.done() || line[cur.pos] != ':') {
            cur.pos = kw_start;
            cur.fail("expected 'gens:' or 'rel:'");
        }
        ++cur.pos;

        if (keyword == "gens") {
            if (have_gens) cur.fail("duplicate 'gens:' line");
            have_gens = true;
            for (cur.skip_space(); !cur.done(); cur.skip_space()) {
                const auto col = cur.column();
                auto n = std::string(cur.name());
                if (std::find(names.begin(), names.end(), n) != names.end())
                    throw ParseError("duplicate generator name '" + n + "'", line_no, col);
                if (!cur.done() && !std::isspace(static_cast<unsigned char>(line[cur.pos])))
                    cur.fail("unexpected character in generator list");
                names.push_back(std::move(n));
            }
        } else if (keyword == "rel") {
            if (!have_gens) cur.fail("'rel:' before 'gens:'");
            std::vector<Syllable> raw;
            for (cur.skip_space(); !cur.done(); cur.skip_space()) {
                const auto col = cur.column();
                const auto n = cur.name();
                auto it = std::find(names.begin(), names.end(), n);
                if (it == names.end()) throw ParseError("unknown generator '" + std::string(n) + "'", line_no, col);
                std::int64_t exponent = 1;
                if (!cur.done() && line[cur.pos] == '^') {
                    ++cur.pos;
                    const auto num_start = cur.pos;
                    if (!cur.done() && (line[cur.pos] == '-' || line[cur.pos] == '+')) ++cur.pos;
                    while (!cur.done() && std::isdigit(static_cast<unsigned char>(line[cur.pos]))) ++cur.pos;
                    const auto digits = line.substr(num_start, cur.pos - num_start);
                    const char* first = digits.data() + (digits.size() && digits.front() == '+' ? 1 : 0);
                    auto [ptr, ec] = std::from_chars(first, digits.data() + digits.size(), exponent);
                    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
                        cur.pos = num_start;
                        cur.fail("expected an integer exponent after '^'");
                    }
                    if (exponent == 0) {
                        cur.pos = num_start;
                        cur.fail("zero exponent");
                    }
                }
                if (!cur.done() && !std::isspace(static_cast<unsigned char>(line[cur.pos])))
                    cur.fail("expected whitespace between tokens");
                raw.push_back({static_cast<std::size_t>(it - names.begin()), exponent});
            }
            relations.push_back(free_reduce(raw));
        } else {
            cur.pos = kw_start;
            cur.fail("unknown keyword '" + std::string(keyword) + "'");
        }
        if (end == text.size()) break;
    }
    if (!have_gens) throw ParseError("missing 'gens:' line", line_no == 0 ? 1 : line_no, 1);
    return Presentation(std::move(names), std::move(relations));
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
    std::string out;
    for (const auto& s : w.syllables()) {
        if (!out.empty()) out += ' ';
        out += names.at(s.generator);
        if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
    }
    return out;
}

std::string serialize(const Presentation& p) {
    std::string out = "gens:";
    for (const auto& n : p.generator_names()) out += ' ' + n;
    out += '\n';
    for (const auto& r : p.relations()) {
        out += "rel:";
        if (!r.empty()) out += ' ' + word_to_string(r, p.generator_names());
        out += '\n';
    }
    return out;
}

const std::vector<std::string>& cartwright_steger_relation_text() {
    static const std::vector<std::string> relations = {
        "y^-1 z^-2 x^-3 z^-1 x^-1 z y^-2 z^-1 y x^-3",
        "y^3 x^3 z y^-1 z^-1 x^-3 y^-2 z x z^-1 x^-1",
        "y z^-1 x^-1 z^-1 x^-3 y^-3 z^-1 x^-3 z^-1 y^-1 z y",
        "y z x y^3 x^3 z y^-1 x^3 z^2 y^-1 z^-1",
        "z^-1 x^-3 y^-3 z x^-1 z^-1 y^-1 z x y^3 x^3 y",
        "z^-1 x^-3 y^-2 z^-2 x^-3 y^-1 z x z^-1 y^-1 z y^2 z^-1 x^-2",
        "z x^-1 z^-1 y^2 x^3 z^2 x z^-1 y^-1 z y^2 z^-2 x^-3 y^-3",
        "y x^2 z y^-2 z^-1 y x^-3 z^-2 x^-3 y^-3 z y z^-2 x^-3",
        "y^-2 x y^3 z^-1 y^-1 z y^2 z^-1 x^-1 y^-1 z x^3 y^-1 z y^-1 z y z^-2 x^-3",
        "z^-1 x^3 z^2 y^-1 z^-1 y^4 x^3 z y^-1 z y^3 x^3 z y^-1 z x z^-1 x^-3 y^-2",
        "z^-1 x^-3 y^-3 z^-1 y z y^-2 z^-1 y^4 x^3 z y^-1 z x z^-1 x^-3 z^-1 x^-2 z y^-1 z^-2 x^-3",
        "y^-1 z y z^-2 x^-3 y^3 x^3 z x^2 z x^3 z x^-1 z^-1 y z^-1 x^-3 y^-3 z^-1 y z y^-2 z^-1 y z x^-1 z^-1 y^-1 "
        "z",
    };
    return relations;
}

const Presentation& cartwright_steger() {
    static const Presentation cs = [] {
        std::string text = "gens: x y z\n";
        for (const auto& r : cartwright_steger_relation_text()) text += "rel: " + r + "\n";
        return parse_presentation(text);
    }();
    return cs;
}

}  // namespace foxjump
