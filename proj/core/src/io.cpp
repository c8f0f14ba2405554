#include "bst/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "bst/instance.hpp"

namespace bst {

namespace {

struct Token {
    enum class Kind { Word, Number, String, Open, Close, End };
    Kind kind = Kind::End;
    std::string text;
    long long number = 0;
    bool integral = false;
    int line = 0;
};

class GmlLexer {
public:
    explicit GmlLexer(const std::string& text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') { // comment to end of line
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
        Token tok;
        tok.line = line_;
        if (pos_ >= text_.size()) {
            return tok;
        }
        char c = text_[pos_];
        if (c == '[') {
            ++pos_;
            tok.kind = Token::Kind::Open;
            return tok;
        }
        if (c == ']') {
            ++pos_;
            tok.kind = Token::Kind::Close;
            return tok;
        }
        if (c == '"') {
            ++pos_;
            std::string value;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\n') {
                    ++line_;
                }
                value += text_[pos_++];
            }
            if (pos_ >= text_.size()) {
                throw ParseError("unterminated string", tok.line);
            }
            ++pos_;
            tok.kind = Token::Kind::String;
            tok.text = std::move(value);
            return tok;
        }
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            ++pos_;
            bool integral = true;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isdigit(static_cast<unsigned char>(d))) {
                    ++pos_;
                } else if (d == '.' || d == 'e' || d == 'E' || d == '-' || d == '+') {
                    integral = false;
                    ++pos_;
                } else {
                    break;
                }
            }
            tok.kind = Token::Kind::Number;
            tok.text = text_.substr(start, pos_ - start);
            tok.integral = integral;
            if (integral) {
                tok.number = std::stoll(tok.text);
            }
            return tok;
        }
        size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '[' && text_[pos_] != ']') {
            ++pos_;
        }
        tok.kind = Token::Kind::Word;
        tok.text = text_.substr(start, pos_ - start);
        return tok;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
};

// Skips one value: a scalar token or a bracketed block (recursively).
void skip_value(GmlLexer& lex) {
    Token tok = lex.next();
    switch (tok.kind) {
        case Token::Kind::Open: {
            int depth = 1;
            while (depth > 0) {
                Token inner = lex.next();
                if (inner.kind == Token::Kind::End) {
                    throw ParseError("unterminated block", inner.line);
                }
                if (inner.kind == Token::Kind::Open) {
                    ++depth;
                } else if (inner.kind == Token::Kind::Close) {
                    --depth;
                }
            }
            break;
        }
        case Token::Kind::Word:
        case Token::Kind::Number:
        case Token::Kind::String:
            break;
        default:
            throw ParseError("expected a value", tok.line);
    }
}

long long parse_id_field(GmlLexer& lex, const char* what) {
    Token tok = lex.next();
    if (tok.kind != Token::Kind::Number || !tok.integral) {
        throw ParseError(std::string("expected integer ") + what, tok.line);
    }
    return tok.number;
}

} // namespace

Graph parse_gml(const std::string& text, GmlStats* stats) {
    GmlLexer lex(text);
    Token tok = lex.next();
    while (tok.kind == Token::Kind::Word && tok.text != "graph") {
        skip_value(lex); // header attributes like "Creator"
        tok = lex.next();
    }
    if (tok.kind != Token::Kind::Word || tok.text != "graph") {
        throw ParseError("expected a graph block", tok.line);
    }
    tok = lex.next();
    if (tok.kind != Token::Kind::Open) {
        throw ParseError("expected '[' after graph", tok.line);
    }

    std::vector<long long> raw_ids;
    std::vector<std::pair<long long, long long>> raw_edges;
    std::vector<int> edge_lines;

    while (true) {
        tok = lex.next();
        if (tok.kind == Token::Kind::Close) {
            break;
        }
        if (tok.kind == Token::Kind::End) {
            throw ParseError("unterminated graph block", tok.line);
        }
        if (tok.kind != Token::Kind::Word) {
            throw ParseError("expected an attribute name", tok.line);
        }
        if (tok.text == "node") {
            Token open = lex.next();
            if (open.kind != Token::Kind::Open) {
                throw ParseError("expected '[' after node", open.line);
            }
            bool have_id = false;
            long long id = 0;
            while (true) {
                Token inner = lex.next();
                if (inner.kind == Token::Kind::Close) {
                    break;
                }
                if (inner.kind != Token::Kind::Word) {
                    throw ParseError("malformed node block", inner.line);
                }
                if (inner.text == "id") {
                    id = parse_id_field(lex, "node id");
                    have_id = true;
                } else {
                    skip_value(lex);
                }
            }
            if (!have_id) {
                throw ParseError("node block without id", open.line);
            }
            raw_ids.push_back(id);
        } else if (tok.text == "edge") {
            Token open = lex.next();
            if (open.kind != Token::Kind::Open) {
                throw ParseError("expected '[' after edge", open.line);
            }
            bool have_source = false;
            bool have_target = false;
            long long source = 0;
            long long target = 0;
            while (true) {
                Token inner = lex.next();
                if (inner.kind == Token::Kind::Close) {
                    break;
                }
                if (inner.kind != Token::Kind::Word) {
                    throw ParseError("malformed edge block", inner.line);
                }
                if (inner.text == "source") {
                    source = parse_id_field(lex, "edge source");
                    have_source = true;
                } else if (inner.text == "target") {
                    target = parse_id_field(lex, "edge target");
                    have_target = true;
                } else {
                    skip_value(lex);
                }
            }
            if (!have_source || !have_target) {
                throw ParseError("edge block missing source or target", open.line);
            }
            raw_edges.emplace_back(source, target);
            edge_lines.push_back(open.line);
        } else {
            skip_value(lex);
        }
    }

    std::sort(raw_ids.begin(), raw_ids.end());
    if (std::adjacent_find(raw_ids.begin(), raw_ids.end()) != raw_ids.end()) {
        throw ParseError("duplicate node id", 1);
    }
    std::map<long long, int> dense;
    for (size_t i = 0; i < raw_ids.size(); ++i) {
        dense[raw_ids[i]] = static_cast<int>(i);
    }

    GmlStats local;
    std::vector<EdgePair> edges;
    std::set<EdgePair> seen;
    for (size_t i = 0; i < raw_edges.size(); ++i) {
        auto [s, t] = raw_edges[i];
        auto si = dense.find(s);
        auto ti = dense.find(t);
        if (si == dense.end() || ti == dense.end()) {
            throw ParseError("edge endpoint references an undeclared node", edge_lines[i]);
        }
        int u = si->second;
        int v = ti->second;
        if (u == v) {
            ++local.self_loops_dropped;
            continue;
        }
        EdgePair e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second) {
            ++local.parallel_edges_dropped;
            continue;
        }
        edges.push_back(e);
    }
    if (stats) {
        *stats = local;
    }
    return Graph(static_cast<int>(raw_ids.size()), edges);
}

Graph parse_edge_list(const std::string& text) {
    std::vector<EdgePair> edges;
    long long max_id = -1;
    int line_no = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ls(line);
        long long u = 0;
        long long v = 0;
        if (!(ls >> u)) {
            continue; // blank or comment-only line
        }
        if (!(ls >> v)) {
            throw ParseError("expected two integers", line_no);
        }
        std::string extra;
        if (ls >> extra) {
            throw ParseError("trailing tokens after edge", line_no);
        }
        if (u < 0 || v < 0) {
            throw ParseError("negative node id", line_no);
        }
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(max_id + 1), edges);
}

Graph gen_power_law(int n, int attach_m, uint64_t seed) {
    if (attach_m < 1 || n <= attach_m) {
        throw InputError("gen_power_law requires n > attach_m >= 1");
    }
    std::mt19937_64 rng(mix_seed(seed, 0x7061)); // "pa"
    std::vector<EdgePair> edges;
    std::vector<int> endpoints; // one entry per incident edge end
    edges.emplace_back(0, 1);
    endpoints.push_back(0);
    endpoints.push_back(1);

    std::vector<int> picked;
    for (int v = 2; v < n; ++v) {
        int wanted = std::min(attach_m, v);
        picked.clear();
        while (static_cast<int>(picked.size()) < wanted) {
            int target = endpoints[rng() % endpoints.size()];
            if (std::find(picked.begin(), picked.end(), target) == picked.end()) {
                picked.push_back(target);
            }
        }
        for (int target : picked) {
            edges.emplace_back(target, v);
            endpoints.push_back(target);
            endpoints.push_back(v);
        }
    }
    return Graph(n, edges);
}

std::vector<int> sample_terminals(const Graph& g, int k, uint64_t seed) {
    if (k < 1) {
        throw InputError("terminal count must be at least 1");
    }
    std::vector<char> seen(g.node_count(), 0);
    std::vector<int> best;
    for (int v = 0; v < g.node_count(); ++v) {
        if (!seen[v]) {
            std::vector<int> comp = component_of(g, v);
            for (int u : comp) {
                seen[u] = 1;
            }
            if (comp.size() > best.size()) {
                best = std::move(comp); // first-seen wins ties: lowest node id
            }
        }
    }
    if (k > static_cast<int>(best.size())) {
        throw InputError("terminal count " + std::to_string(k) +
                         " exceeds the largest component (" +
                         std::to_string(best.size()) + " nodes)");
    }
    std::mt19937_64 rng(mix_seed(seed, 0x7465726d)); // "term"
    for (int i = 0; i < k; ++i) {
        size_t j = i + rng() % (best.size() - i);
        std::swap(best[i], best[j]);
    }
    best.resize(k);
    std::sort(best.begin(), best.end());
    return best;
}

GapInstance gap_instance(const Graph& base, int attach_node, int p, long long node_cap) {
    if (base.node_count() < 1) {
        throw InputError("gap construction needs a nonempty base graph");
    }
    if (!base.has_node(attach_node)) {
        throw InputError("attach node not in base graph");
    }
    if (p < 1) {
        throw InputError("copy exponent p must be at least 1");
    }
    long long n = base.node_count();
    long long copies = 1;
    for (int i = 0; i < p; ++i) {
        copies *= n;
        if (copies > node_cap) {
            throw LimitError("gap construction exceeds the node cap of " +
                             std::to_string(node_cap));
        }
    }
    long long total = copies * n + 1;
    if (total > node_cap) {
        throw LimitError("gap construction exceeds the node cap of " +
                         std::to_string(node_cap));
    }

    int hub = static_cast<int>(total - 1);
    std::vector<EdgePair> edges;
    edges.reserve(static_cast<size_t>(copies) * (base.edge_count() + 1));
    for (long long c = 0; c < copies; ++c) {
        int offset = static_cast<int>(c * n);
        for (const auto& [u, v] : base.edges()) {
            edges.emplace_back(offset + u, offset + v);
        }
        edges.emplace_back(offset + attach_node, hub);
    }

    GapInstance result;
    result.graph = Graph(static_cast<int>(total), edges);
    result.terminals.resize(hub);
    for (int v = 0; v < hub; ++v) {
        result.terminals[v] = v;
    }
    result.branch_weight = static_cast<double>(total);
    result.hub = hub;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write file: " + path);
    }
    out << content;
    if (!out) {
        throw InputError("write failed: " + path);
    }
}

namespace {

// "key=value,key=value" tail of a generator spec.
std::map<std::string, std::string> parse_spec_args(const std::string& args) {
    std::map<std::string, std::string> result;
    std::istringstream in(args);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw InputError("bad generator argument: " + item);
        }
        result[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return result;
}

std::string basename_of(const std::string& path) {
    auto slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = name.find_last_of('.');
    return dot == std::string::npos ? name : name.substr(0, dot);
}

} // namespace

Graph load_topology(const std::string& spec, uint64_t seed, std::string* label_out) {
    if (spec.rfind("pa:", 0) == 0) {
        auto args = parse_spec_args(spec.substr(3));
        if (!args.count("n") || !args.count("m")) {
            throw InputError("pa generator needs n= and m=");
        }
        int n = std::stoi(args.at("n"));
        int m = std::stoi(args.at("m"));
        if (label_out) {
            *label_out = "pa_n" + std::to_string(n) + "_m" + std::to_string(m);
        }
        return gen_power_law(n, m, seed);
    }
    std::string text = read_file(spec);
    if (label_out) {
        *label_out = basename_of(spec);
    }
    if (spec.size() >= 4 && spec.substr(spec.size() - 4) == ".gml") {
        return parse_gml(text);
    }
    return parse_edge_list(text);
}

} // namespace bst
