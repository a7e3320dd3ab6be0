#include "mckay/cartan.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace mckay {

std::string DynkinType::name() const {
    if (!known()) return "unknown";
    return family + std::to_string(rank) + (affine ? "~" : "");
}

namespace {

IntMatrix from_edges(int n, const std::vector<std::array<Int, 4>>& edges) {
    IntMatrix m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 2;
    for (const auto& e : edges) {
        m[e[0]][e[1]] = -e[2];
        m[e[1]][e[0]] = -e[3];
    }
    return m;
}

std::vector<std::array<Int, 4>> path_edges(int n) {
    std::vector<std::array<Int, 4>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1, 1});
    return edges;
}

}  // namespace

IntMatrix cartan_matrix(const DynkinType& type) {
    const int n = type.rank;
    const std::string& f = type.family;
    if (!type.affine) {
        if (f == "A" && n >= 1) return from_edges(n, path_edges(n));
        if (f == "B" && n >= 2) {
            auto e = path_edges(n);
            e[n - 2] = {n - 2, n - 1, 2, 1};
            return from_edges(n, e);
        }
        if (f == "C" && n >= 2) {
            auto e = path_edges(n);
            e[n - 2] = {n - 2, n - 1, 1, 2};
            return from_edges(n, e);
        }
        if (f == "D" && n >= 4) {
            auto e = path_edges(n - 1);
            e.push_back({n - 3, n - 1, 1, 1});
            return from_edges(n, e);
        }
        if (f == "E" && n >= 6 && n <= 8) {
            auto e = path_edges(n - 1);
            e.push_back({2, n - 1, 1, 1});
            return from_edges(n, e);
        }
        if (f == "F" && n == 4) {
            auto e = path_edges(4);
            e[1] = {1, 2, 2, 1};
            return from_edges(4, e);
        }
        if (f == "G" && n == 2) return from_edges(2, {{0, 1, 1, 3}});
    } else {
        if (f == "A" && n == 1) return from_edges(2, {{0, 1, 2, 2}});
        if (f == "A" && n >= 2) {
            auto e = path_edges(n + 1);
            e.push_back({0, n, 1, 1});
            return from_edges(n + 1, e);
        }
        if (f == "D" && n >= 4) {
            // the finite D_n fork plus a second fork at the far end
            auto e = path_edges(n - 1);
            e.push_back({n - 3, n - 1, 1, 1});
            e.push_back({1, n, 1, 1});
            return from_edges(n + 1, e);
        }
        if (f == "E" && n == 6) {
            auto e = path_edges(5);
            e.push_back({2, 5, 1, 1});
            e.push_back({5, 6, 1, 1});
            return from_edges(7, e);
        }
        if (f == "E" && n == 7) {
            auto e = path_edges(7);
            e.push_back({3, 7, 1, 1});
            return from_edges(8, e);
        }
        if (f == "E" && n == 8) {
            auto e = path_edges(8);
            e.push_back({2, 8, 1, 1});
            return from_edges(9, e);
        }
    }
    throw std::invalid_argument("no Cartan matrix for type " + type.name());
}

bool is_cartan_shape(const IntMatrix& m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) return false;
        if (m[i][i] != 2) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i][j] > 0) return false;
            if ((m[i][j] == 0) != (m[j][i] == 0)) return false;
        }
    }
    return true;
}

namespace {

// Sorted row/column off-diagonal profile; permutation-invariant node label.
std::vector<Int> node_signature(const IntMatrix& m, int i) {
    std::vector<Int> sig;
    const int n = static_cast<int>(m.size());
    for (int j = 0; j < n; ++j)
        if (j != i && m[i][j] != 0) {
            sig.push_back(m[i][j]);
            sig.push_back(m[j][i]);
        }
    // group the (row, col) pairs so the signature is order-free
    std::vector<Int> pairs;
    for (std::size_t t = 0; t < sig.size(); t += 2)
        pairs.push_back(sig[t] * 100 + sig[t + 1]);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

bool match_permutation(const IntMatrix& m, const IntMatrix& target,
                       std::vector<int>& perm) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Int>> sig_m(n), sig_t(n);
    for (int i = 0; i < n; ++i) {
        sig_m[i] = node_signature(m, i);
        sig_t[i] = node_signature(target, i);
    }
    {
        auto a = sig_m;
        auto b = sig_t;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    perm.assign(n, -1);
    std::vector<bool> used(n, false);
    // Depth-first assignment input node -> target node with row/column checks
    // against everything already placed.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;

    auto backtrack = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        int i = order[depth];
        for (int t = 0; t < n; ++t) {
            if (used[t] || sig_m[i] != sig_t[t]) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                int j = order[d];
                if (m[i][j] != target[t][perm[j]] || m[j][i] != target[perm[j]][t]) ok = false;
            }
            if (!ok) continue;
            perm[i] = t;
            used[t] = true;
            if (self(self, depth + 1)) return true;
            used[t] = false;
            perm[i] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

}  // namespace

CartanClassification classify_cartan(const IntMatrix& m) {
    CartanClassification result;
    if (!is_cartan_shape(m)) return result;
    const int n = static_cast<int>(m.size());
    if (n == 0) return result;

    std::vector<DynkinType> candidates;
    auto add = [&](std::string family, int rank, bool affine) {
        candidates.push_back(DynkinType{std::move(family), rank, affine});
    };
    add("A", n, false);
    if (n >= 2) add("B", n, false);
    if (n >= 2) add("C", n, false);
    if (n >= 4) add("D", n, false);
    if (n >= 6 && n <= 8) add("E", n, false);
    if (n == 4) add("F", 4, false);
    if (n == 2) add("G", 2, false);
    if (n >= 2) add("A", n - 1, true);
    if (n >= 5) add("D", n - 1, true);
    if (n >= 7 && n <= 9) add("E", n - 1, true);

    for (const DynkinType& type : candidates) {
        IntMatrix target = cartan_matrix(type);
        std::vector<int> perm;
        if (match_permutation(m, target, perm)) {
            result.type = type;
            result.permutation = std::move(perm);
            return result;
        }
    }
    return result;
}

namespace {

struct Edge {
    int a, b;      // node indices
    int mult;      // 1, 2 or 3
    int arrow;     // 0 none, +1 toward b, -1 toward a
};

std::string edge_text(const Edge& e, bool toward_right) {
    // toward_right: rendering a -> b left to right
    const std::string bar = e.mult == 1 ? "-" : (e.mult == 2 ? "=" : "≡");
    std::string s = bar + bar + bar;
    if (e.arrow != 0) {
        bool arrow_right = (e.arrow > 0) == toward_right;
        s = arrow_right ? bar + bar + ">" : "<" + bar + bar;
    }
    return s;
}

}  // namespace

std::string ascii_dynkin(const IntMatrix& m, const std::vector<std::string>& labels) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return "(empty diagram)\n";

    std::vector<Edge> edges;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (m[i][j] == 0 && m[j][i] == 0) continue;
            Edge e;
            e.a = i;
            e.b = j;
            Int down = -m[i][j], up = -m[j][i];
            e.mult = static_cast<int>(std::max(down, up));
            // the node whose row holds the bigger magnitude is the short root
            e.arrow = down > up ? -1 : (up > down ? 1 : 0);
            edges.push_back(e);
            adj[i].push_back(j);
            adj[j].push_back(i);
        }

    auto find_edge = [&](int a, int b) -> const Edge& {
        for (const Edge& e : edges)
            if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e;
        throw std::logic_error("missing edge");
    };
    auto node_token = [&](int i) { return "o" + std::to_string(i + 1); };

    std::string out;
    bool drawn = false;

    int branch_nodes = 0, max_degree = 0;
    for (int i = 0; i < n; ++i) {
        if (adj[i].size() >= 3) ++branch_nodes;
        max_degree = std::max(max_degree, static_cast<int>(adj[i].size()));
    }
    const bool is_cycle = !edges.empty() && static_cast<int>(edges.size()) == n &&
                          max_degree == 2;

    if (max_degree <= 2 && static_cast<int>(edges.size()) == n - 1) {
        // simple path
        int start = 0;
        for (int i = 0; i < n; ++i)
            if (adj[i].size() <= 1) {
                start = i;
                break;
            }
        std::vector<int> chain{start};
        std::vector<bool> seen(n, false);
        seen[start] = true;
        while (static_cast<int>(chain.size()) < n) {
            bool extended = false;
            for (int next : adj[chain.back()])
                if (!seen[next]) {
                    seen[next] = true;
                    chain.push_back(next);
                    extended = true;
                    break;
                }
            if (!extended) break;
        }
        if (static_cast<int>(chain.size()) == n) {
            std::string line = node_token(chain[0]);
            for (std::size_t t = 1; t < chain.size(); ++t)
                line += " " + edge_text(find_edge(chain[t - 1], chain[t]), true) + " " +
                        node_token(chain[t]);
            out += line + "\n";
            drawn = true;
        }
    } else if (is_cycle) {
        std::vector<int> chain{0};
        std::vector<bool> seen(n, false);
        seen[0] = true;
        while (static_cast<int>(chain.size()) < n)
            for (int next : adj[chain.back()])
                if (!seen[next]) {
                    seen[next] = true;
                    chain.push_back(next);
                    break;
                }
        std::string line = node_token(chain[0]);
        for (std::size_t t = 1; t < chain.size(); ++t)
            line += " " + edge_text(find_edge(chain[t - 1], chain[t]), true) + " " +
                    node_token(chain[t]);
        out += line + "\n";
        out += "(cycle: " + node_token(chain.back()) + " also joins " + node_token(chain[0]) +
               ")\n";
        drawn = true;
    } else if (branch_nodes >= 1 && static_cast<int>(edges.size()) == n - 1) {
        // tree: longest path as the main chain, remaining arms drawn below
        auto farthest = [&](int from) {
            std::vector<int> dist(n, -1), prev(n, -1);
            std::vector<int> queue{from};
            dist[from] = 0;
            for (std::size_t h = 0; h < queue.size(); ++h)
                for (int next : adj[queue[h]])
                    if (dist[next] < 0) {
                        dist[next] = dist[queue[h]] + 1;
                        prev[next] = queue[h];
                        queue.push_back(next);
                    }
            int best = from;
            for (int i = 0; i < n; ++i)
                if (dist[i] > dist[best]) best = i;
            return std::pair<int, std::vector<int>>(best, prev);
        };
        int end1 = farthest(0).first;
        auto [end2, prev] = farthest(end1);
        std::vector<int> chain;
        for (int v = end2; v >= 0; v = prev[v]) chain.push_back(v);
        std::reverse(chain.begin(), chain.end());

        std::vector<bool> on_chain(n, false);
        for (int v : chain) on_chain[v] = true;

        std::string line = node_token(chain[0]);
        std::vector<std::size_t> col(n, 0);
        col[chain[0]] = 0;
        for (std::size_t t = 1; t < chain.size(); ++t) {
            line += " " + edge_text(find_edge(chain[t - 1], chain[t]), true) + " ";
            col[chain[t]] = line.size();
            line += node_token(chain[t]);
        }
        out += line + "\n";

        // arms hang below their chain node, one row per arm level
        std::vector<std::vector<std::pair<std::size_t, int>>> rows;  // (column, node)
        for (int v : chain)
            for (int next : adj[v]) {
                if (on_chain[next]) continue;
                const std::size_t column = col[v];
                std::size_t level = 0;
                int cur = next, parent = v;
                while (cur >= 0) {
                    if (rows.size() <= level) rows.resize(level + 1);
                    rows[level].push_back({column, cur});
                    int deeper = -1;
                    for (int w : adj[cur])
                        if (w != parent && !on_chain[w]) deeper = w;
                    parent = cur;
                    cur = deeper;
                    ++level;
                }
            }
        for (const auto& row : rows) {
            std::string bar_line, node_line;
            for (const auto& [column, node] : row) {
                if (bar_line.size() < column + 1) bar_line.resize(column + 1, ' ');
                bar_line[column] = '|';
                if (node_line.size() < column) node_line.resize(column, ' ');
                node_line += node_token(node);
            }
            out += bar_line + "\n" + node_line + "\n";
        }
        drawn = true;
    }

    if (!drawn) {
        for (const Edge& e : edges)
            out += node_token(e.a) + " " + edge_text(e, true) + " " + node_token(e.b) + "\n";
    }
    for (int i = 0; i < n && i < static_cast<int>(labels.size()); ++i)
        out += "  " + node_token(i) + ": " + labels[i] + "\n";
    return out;
}

}  // namespace mckay
