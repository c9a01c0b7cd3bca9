#include "toriclag/polytope_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace toriclag {

namespace {

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

bool is_integer(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    return i < s.size() && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                                       [](unsigned char c) { return std::isdigit(c); });
}

Integer parse_integer(const std::string& s, std::size_t line) {
    if (!is_integer(s)) throw ParseError(line, "expected an integer, got '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

std::size_t parse_count(const std::vector<std::string>& words, const std::string& key, std::size_t line) {
    if (words.size() != 2 || words[0] != key) throw ParseError(line, "expected '" + key + " <count>'");
    const Integer v = parse_integer(words[1], line);
    if (v < 1 || v > 100000) throw ParseError(line, key + " must be a positive count");
    return v.get_ui();
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

HalfspacePresentation parse_polytope(std::istream& in) {
    std::size_t k = 0, n = 0, line_no = 0;
    std::vector<IntVector> normals;
    RatVector b;
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        const std::string line = raw.substr(0, raw.find('#'));
        if (split_words(line).empty()) continue;
        if (k == 0) {
            k = parse_count(split_words(line), "dim", line_no);
            continue;
        }
        if (n == 0) {
            n = parse_count(split_words(line), "facets", line_no);
            continue;
        }
        if (normals.size() == n) throw ParseError(line_no, "more facet lines than declared");
        const auto bar = line.find('|');
        if (bar == std::string::npos) throw ParseError(line_no, "expected 'a_1 ... a_k | b'");
        const auto lhs = split_words(line.substr(0, bar));
        const auto rhs = split_words(line.substr(bar + 1));
        if (lhs.size() != k)
            throw ParseError(line_no, "expected " + std::to_string(k) + " normal entries, got " + std::to_string(lhs.size()));
        if (rhs.size() != 1) throw ParseError(line_no, "expected exactly one offset after '|'");
        IntVector a;
        for (const auto& w : lhs) a.push_back(parse_integer(w, line_no));
        if (std::all_of(a.begin(), a.end(), [](const Integer& x) { return sgn(x) == 0; }))
            throw ParseError(line_no, "normal is zero");
        try {
            b.push_back(parse_rational(rhs[0]));
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
        normals.push_back(std::move(a));
    }
    if (k == 0) throw ParseError(line_no, "missing 'dim' header");
    if (n == 0) throw ParseError(line_no, "missing 'facets' header");
    if (normals.size() != n)
        throw ParseError(line_no, "expected " + std::to_string(n) + " facet lines, got " + std::to_string(normals.size()));
    if (n < k) throw ParseError(line_no, "need at least as many facets as the dimension");
    return HalfspacePresentation::from_normals(normals, b);
}

HalfspacePresentation parse_polytope_text(const std::string& text) {
    std::istringstream is(text);
    return parse_polytope(is);
}

HalfspacePresentation read_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_polytope(in);
}

std::string format_polytope(const HalfspacePresentation& p) {
    std::ostringstream os;
    os << "dim " << p.dim() << "\nfacets " << p.facet_count() << "\n";
    for (std::size_t i = 0; i < p.facet_count(); ++i) {
        for (std::size_t r = 0; r < p.dim(); ++r) os << p.a(r, i) << ' ';
        os << "| " << to_string(p.b[i]) << "\n";
    }
    return os.str();
}

}  // namespace toriclag
