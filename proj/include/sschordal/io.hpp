#ifndef SSCHORDAL_IO_HPP
#define SSCHORDAL_IO_HPP

// Plain-text digraph format:
//
//   n m
//   u v        (m lines, arc u -> v; a digon is two lines)
//   # v name   (optional trailing label lines)
//
// Arc lines are written in lexicographic (u, v) order.

#include <sschordal/digraph.hpp>

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace sschordal {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Optional vertex names; an empty entry (or a short table) means "use the index".
struct Labels {
    std::vector<std::string> names;

    std::string operator()(Vertex v) const {
        if (v >= 0 && static_cast<std::size_t>(v) < names.size() && !names[v].empty()) return names[v];
        return std::to_string(v);
    }
    bool empty() const {
        for (const auto& s : names)
            if (!s.empty()) return false;
        return true;
    }
    /// Labels of an induced subdigraph, given its index -> host map.
    Labels restrict_to(std::span<const Vertex> original) const {
        Labels r;
        for (Vertex v : original) r.names.push_back((*this)(v));
        return r;
    }
};

struct LabelledDigraph {
    Digraph digraph;
    Labels labels;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool to_int(std::string_view s, long long& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

}  // namespace detail

inline LabelledDigraph parse_labelled(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::size_t pos = 0; pos <= text.size();) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    // Drop trailing blank lines only.
    while (!lines.empty() && detail::split_ws(lines.back()).empty()) lines.pop_back();

    if (lines.empty()) throw ParseError(1, "missing header");
    auto header = detail::split_ws(lines[0]);
    long long n = 0, m = 0;
    if (header.size() != 2 || !detail::to_int(header[0], n) || !detail::to_int(header[1], m) || n < 0 || m < 0)
        throw ParseError(1, "malformed header, expected \"n m\"");
    if (n > max_order) throw ParseError(1, "vertex count exceeds " + std::to_string(max_order));
    if (static_cast<std::size_t>(m) + 1 > lines.size()) throw ParseError(lines.size(), "fewer arc lines than declared");

    Digraph d(static_cast<int>(n));
    for (std::size_t k = 1; k <= static_cast<std::size_t>(m); ++k) {
        auto f = detail::split_ws(lines[k]);
        long long u = 0, v = 0;
        if (f.size() != 2 || !detail::to_int(f[0], u) || !detail::to_int(f[1], v))
            throw ParseError(k + 1, "malformed arc line, expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(k + 1, "vertex index out of range");
        if (u == v) throw ParseError(k + 1, "loop arc");
        d.add_arc(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }

    Labels labels;
    for (std::size_t k = static_cast<std::size_t>(m) + 1; k < lines.size(); ++k) {
        auto f = detail::split_ws(lines[k]);
        if (f.empty()) continue;
        long long v = 0;
        if (f.size() != 3 || f[0] != "#" || !detail::to_int(f[1], v))
            throw ParseError(k + 1, "expected label line \"# v name\"");
        if (v < 0 || v >= n) throw ParseError(k + 1, "label vertex out of range");
        if (labels.names.size() < static_cast<std::size_t>(n)) labels.names.resize(n);
        labels.names[v] = std::string(f[2]);
    }
    return {std::move(d), std::move(labels)};
}

inline Digraph parse(std::string_view text) { return parse_labelled(text).digraph; }

inline std::string serialize(const Digraph& d, const Labels& labels = {}) {
    std::ostringstream os;
    auto arcs = d.arcs();
    os << d.order() << ' ' << arcs.size() << '\n';
    for (auto [u, v] : arcs) os << u << ' ' << v << '\n';
    for (std::size_t v = 0; v < labels.names.size() && v < static_cast<std::size_t>(d.order()); ++v)
        if (!labels.names[v].empty()) os << "# " << v << ' ' << labels.names[v] << '\n';
    return os.str();
}

inline std::string dot_quote(const std::string& s) {
    std::string r = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') r += '\\';
        r += c;
    }
    return r + '"';
}

/// Graphviz rendering; a digon becomes one edge with dir=both.
inline std::string to_dot(const Digraph& d, const Labels& labels = {}) {
    std::ostringstream os;
    os << "digraph D {\n";
    for (Vertex v = 0; v < d.order(); ++v) os << "  " << v << " [label=" << dot_quote(labels(v)) << "];\n";
    for (Vertex u = 0; u < d.order(); ++u)
        for (Vertex v = u + 1; v < d.order(); ++v) switch (d.pair_kind(u, v)) {
                case PairKind::Forward: os << "  " << u << " -> " << v << ";\n"; break;
                case PairKind::Backward: os << "  " << v << " -> " << u << ";\n"; break;
                case PairKind::Digon: os << "  " << u << " -> " << v << " [dir=both];\n"; break;
                case PairKind::None: break;
            }
    os << "}\n";
    return os.str();
}

}  // namespace sschordal

#endif
