#ifndef STRKERN_STREAM_HPP
#define STRKERN_STREAM_HPP

// Instance stream formats, multi-pass stream sources, and relabeling of
// kernel output. The text format is line based:
//
//   p hs <d> <k> <n>     header for hitting set instances
//   p sm <d> <k> <n>     header for set matching instances
//   p eds <k> <n>        header for edge dominating set instances (d = 2)
//   s <id> ...           one set per line, up to d ids (a bare `s` is the empty set)
//   e <u> <v>            one edge per line
//   c ...                comment, ignored
//
// All identifiers are 0-based and must be smaller than the announced n.
// Isolated vertices/elements exist implicitly via n and are never listed.

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace strkern {

using ElementId = std::uint32_t;

enum class Problem { HittingSet, SetMatching, EdgeDominatingSet };

inline std::string_view problem_tag(Problem p) {
    switch (p) {
    case Problem::HittingSet: return "hs";
    case Problem::SetMatching: return "sm";
    case Problem::EdgeDominatingSet: return "eds";
    }
    return "?";
}

/// Parameters announced before the element stream.
struct InstanceHeader {
    Problem problem = Problem::HittingSet;
    unsigned d = 1;        // maximum set size; fixed to 2 for EDS
    std::uint64_t k = 0;   // solution-size budget
    std::uint64_t n = 1;   // universe / vertex count, ids live in [0, n)
};

/// A set of at most d elements, stored strictly increasing.
struct HyperEdge {
    std::vector<ElementId> elements;

    HyperEdge() = default;
    HyperEdge(std::initializer_list<ElementId> ids) : elements(ids) { canonicalize(); }
    explicit HyperEdge(std::vector<ElementId> ids) : elements(std::move(ids)) { canonicalize(); }

    std::size_t size() const { return elements.size(); }
    bool empty() const { return elements.empty(); }

    bool operator==(const HyperEdge& other) const = default;
    auto operator<=>(const HyperEdge& other) const = default;

private:
    void canonicalize() {
        std::sort(elements.begin(), elements.end());
        if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
            throw std::invalid_argument("duplicate element in set");
    }
};

/// An unordered vertex pair, stored with u < v.
struct Edge {
    ElementId u = 0;
    ElementId v = 0;

    Edge() = default;
    Edge(ElementId a, ElementId b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b) throw std::invalid_argument("self-loop");
    }

    bool operator==(const Edge& other) const = default;
    auto operator<=>(const Edge& other) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct ParsedInstance {
    InstanceHeader header;
    std::vector<HyperEdge> sets;  // filled for hs/sm
    std::vector<Edge> edges;      // filled for eds
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

inline std::uint64_t parse_u64(std::string_view token, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
    return value;
}

}  // namespace detail

inline ParsedInstance parse_instance(std::string_view text) {
    constexpr std::uint64_t kMaxUniverse = std::uint64_t{1} << 32;

    ParsedInstance out;
    bool have_header = false;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto tokens = detail::split_tokens(line);
        if (tokens.empty() || tokens[0] == "c") continue;

        if (tokens[0] == "p") {
            if (have_header) throw ParseError(line_no, "duplicate header");
            if (tokens.size() < 2) throw ParseError(line_no, "malformed header");
            InstanceHeader h;
            if (tokens[1] == "hs" || tokens[1] == "sm") {
                if (tokens.size() != 5) throw ParseError(line_no, "malformed header");
                h.problem = tokens[1] == "hs" ? Problem::HittingSet : Problem::SetMatching;
                std::uint64_t d = detail::parse_u64(tokens[2], line_no, "d");
                if (d < 1 || d > 63) throw ParseError(line_no, "d out of range");
                h.d = static_cast<unsigned>(d);
                h.k = detail::parse_u64(tokens[3], line_no, "k");
                h.n = detail::parse_u64(tokens[4], line_no, "n");
            } else if (tokens[1] == "eds") {
                if (tokens.size() != 4) throw ParseError(line_no, "malformed header");
                h.problem = Problem::EdgeDominatingSet;
                h.d = 2;
                h.k = detail::parse_u64(tokens[2], line_no, "k");
                h.n = detail::parse_u64(tokens[3], line_no, "n");
            } else {
                throw ParseError(line_no, "unknown problem tag '" + std::string(tokens[1]) + "'");
            }
            if (h.n < 1) throw ParseError(line_no, "n must be positive");
            if (h.n > kMaxUniverse) throw ParseError(line_no, "n too large");
            out.header = h;
            have_header = true;
        } else if (tokens[0] == "s") {
            if (!have_header) throw ParseError(line_no, "set record before header");
            if (out.header.problem == Problem::EdgeDominatingSet)
                throw ParseError(line_no, "set record in an edge instance");
            if (tokens.size() - 1 > out.header.d)
                throw ParseError(line_no, "set larger than d (" + std::to_string(tokens.size() - 1) +
                                              " > " + std::to_string(out.header.d) + ")");
            std::vector<ElementId> ids;
            ids.reserve(tokens.size() - 1);
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                std::uint64_t id = detail::parse_u64(tokens[t], line_no, "element id");
                if (id >= out.header.n) throw ParseError(line_no, "element id out of range");
                ids.push_back(static_cast<ElementId>(id));
            }
            std::sort(ids.begin(), ids.end());
            if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
                throw ParseError(line_no, "duplicate element in set");
            HyperEdge set;
            set.elements = std::move(ids);
            out.sets.push_back(std::move(set));
        } else if (tokens[0] == "e") {
            if (!have_header) throw ParseError(line_no, "edge record before header");
            if (out.header.problem != Problem::EdgeDominatingSet)
                throw ParseError(line_no, "edge record in a set instance");
            if (tokens.size() != 3) throw ParseError(line_no, "malformed edge record");
            std::uint64_t a = detail::parse_u64(tokens[1], line_no, "vertex id");
            std::uint64_t b = detail::parse_u64(tokens[2], line_no, "vertex id");
            if (a >= out.header.n || b >= out.header.n) throw ParseError(line_no, "vertex id out of range");
            if (a == b) throw ParseError(line_no, "self-loop");
            out.edges.emplace_back(static_cast<ElementId>(a), static_cast<ElementId>(b));
        } else {
            throw ParseError(line_no, "unknown record type '" + std::string(tokens[0]) + "'");
        }
    }
    if (!have_header) throw ParseError(line_no, "missing header");
    return out;
}

inline std::string serialize_header(const InstanceHeader& h) {
    std::string out = "p ";
    out += problem_tag(h.problem);
    if (h.problem != Problem::EdgeDominatingSet) {
        out += ' ';
        out += std::to_string(h.d);
    }
    out += ' ';
    out += std::to_string(h.k);
    out += ' ';
    out += std::to_string(h.n);
    out += '\n';
    return out;
}

inline std::string serialize_instance(const ParsedInstance& inst) {
    std::string out = serialize_header(inst.header);
    if (inst.header.problem == Problem::EdgeDominatingSet) {
        for (const Edge& e : inst.edges)
            out += "e " + std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
    } else {
        for (const HyperEdge& f : inst.sets) {
            out += 's';
            for (ElementId id : f.elements) out += ' ' + std::to_string(id);
            out += '\n';
        }
    }
    return out;
}

class PassBudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Replayable element source. Every pass yields the identical sequence; the
/// number of passes that may be opened is fixed up front.
template <class Element>
class StreamSource {
public:
    StreamSource(InstanceHeader header, std::vector<Element> elements, unsigned pass_budget)
        : header_(header), elements_(std::move(elements)), pass_budget_(pass_budget) {}

    const InstanceHeader& header() const { return header_; }
    std::size_t size() const { return elements_.size(); }
    unsigned pass_budget() const { return pass_budget_; }
    unsigned passes_opened() const { return passes_opened_; }

    void open_pass() {
        if (passes_opened_ >= pass_budget_)
            throw PassBudgetError("pass budget of " + std::to_string(pass_budget_) + " exhausted");
        ++passes_opened_;
        cursor_ = 0;
        pass_open_ = true;
    }

    std::optional<Element> next() {
        if (!pass_open_) throw std::logic_error("next() without an open pass");
        if (cursor_ >= elements_.size()) {
            pass_open_ = false;
            return std::nullopt;
        }
        return elements_[cursor_++];
    }

private:
    InstanceHeader header_;
    std::vector<Element> elements_;
    std::size_t cursor_ = 0;
    unsigned pass_budget_;
    unsigned passes_opened_ = 0;
    bool pass_open_ = false;
};

inline StreamSource<HyperEdge> make_set_source(const ParsedInstance& inst, unsigned pass_budget = 1) {
    return StreamSource<HyperEdge>(inst.header, inst.sets, pass_budget);
}

inline StreamSource<Edge> make_edge_source(const ParsedInstance& inst, unsigned pass_budget = 2) {
    return StreamSource<Edge>(inst.header, inst.edges, pass_budget);
}

/// Injective identifier map built in order of first appearance.
class Relabeling {
public:
    ElementId add(ElementId original) {
        auto [it, inserted] = to_dense_.try_emplace(original, static_cast<ElementId>(to_original_.size()));
        if (inserted) to_original_.push_back(original);
        return it->second;
    }

    std::optional<ElementId> lookup(ElementId original) const {
        auto it = to_dense_.find(original);
        if (it == to_dense_.end()) return std::nullopt;
        return it->second;
    }

    ElementId original_of(ElementId dense) const { return to_original_.at(dense); }
    std::size_t size() const { return to_original_.size(); }
    const std::vector<ElementId>& originals() const { return to_original_; }

private:
    std::unordered_map<ElementId, ElementId> to_dense_;
    std::vector<ElementId> to_original_;
};

inline unsigned ceil_log2(std::uint64_t x) {
    if (x <= 1) return 0;
    return static_cast<unsigned>(std::bit_width(x - 1));
}

// Fixed header cost charged to every emitted kernel.
inline constexpr std::uint64_t kKernelHeaderBits = 64;

inline std::uint64_t kernel_bits(std::size_t emitted_sets, unsigned d, std::uint64_t distinct_ids) {
    return kKernelHeaderBits +
           static_cast<std::uint64_t>(emitted_sets) * d * ceil_log2(std::max<std::uint64_t>(distinct_ids, 2));
}

enum class Verdict { Reduced, TrivialNo, TrivialYes };

inline std::string_view verdict_tag(Verdict v) {
    switch (v) {
    case Verdict::Reduced: return "REDUCED";
    case Verdict::TrivialNo: return "NO";
    case Verdict::TrivialYes: return "YES";
    }
    return "?";
}

/// Kernel instance over dense identifiers [0, n'), n' = distinct ids retained.
struct ReducedInstance {
    InstanceHeader header;
    std::vector<HyperEdge> sets;
    std::vector<Edge> edges;
    Relabeling relabeling;  // dense -> original via original_of()
};

struct KernelResult {
    Verdict verdict = Verdict::Reduced;
    std::optional<ReducedInstance> instance;  // engaged iff verdict == Reduced
    std::uint64_t bits_reported = kKernelHeaderBits;
};

/// Relabels a retained set family; sets keep their emission order.
inline ReducedInstance reduce_family(const InstanceHeader& original, const std::vector<HyperEdge>& family) {
    ReducedInstance out;
    out.relabeling = Relabeling();
    out.sets.reserve(family.size());
    for (const HyperEdge& f : family) {
        std::vector<ElementId> mapped;
        mapped.reserve(f.size());
        for (ElementId id : f.elements) mapped.push_back(out.relabeling.add(id));
        std::sort(mapped.begin(), mapped.end());
        HyperEdge set;
        set.elements = std::move(mapped);
        out.sets.push_back(std::move(set));
    }
    out.header = original;
    out.header.n = std::max<std::uint64_t>(out.relabeling.size(), 1);
    return out;
}

/// Relabels a retained edge list; edges keep their emission order.
inline ReducedInstance reduce_edge_set(const InstanceHeader& original, const std::vector<Edge>& edges) {
    ReducedInstance out;
    out.relabeling = Relabeling();
    out.edges.reserve(edges.size());
    for (const Edge& e : edges) {
        ElementId a = out.relabeling.add(e.u);
        ElementId b = out.relabeling.add(e.v);
        out.edges.emplace_back(a, b);
    }
    out.header = original;
    out.header.n = std::max<std::uint64_t>(out.relabeling.size(), 1);
    return out;
}

inline KernelResult make_reduced_result(ReducedInstance instance) {
    KernelResult result;
    result.verdict = Verdict::Reduced;
    std::size_t count = instance.header.problem == Problem::EdgeDominatingSet ? instance.edges.size()
                                                                              : instance.sets.size();
    result.bits_reported = kernel_bits(count, instance.header.d, instance.relabeling.size());
    result.instance = std::move(instance);
    return result;
}

inline KernelResult make_verdict_result(Verdict verdict) {
    KernelResult result;
    result.verdict = verdict;
    result.bits_reported = kKernelHeaderBits;
    return result;
}

inline std::string serialize_kernel(const KernelResult& result) {
    std::string out = "c kernel bits=" + std::to_string(result.bits_reported) + " verdict=" +
                      std::string(verdict_tag(result.verdict)) + '\n';
    if (result.verdict == Verdict::Reduced) {
        ParsedInstance inst;
        inst.header = result.instance->header;
        inst.sets = result.instance->sets;
        inst.edges = result.instance->edges;
        out += serialize_instance(inst);
    }
    return out;
}

}  // namespace strkern

#endif  // STRKERN_STREAM_HPP
