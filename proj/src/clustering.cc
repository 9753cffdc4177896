// Copyright 2026 The entstruct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entstruct/clustering.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "entstruct/union_find.h"

using namespace entstruct;

DiagramNode DiagramNode::leaf(uint32_t qubit) {
    DiagramNode n;
    n.kind = Kind::Leaf;
    n.qubit = qubit;
    return n;
}

DiagramNode DiagramNode::cluster(uint32_t w, std::vector<DiagramNode> children) {
    DiagramNode n;
    n.kind = Kind::Cluster;
    n.w = w;
    n.children = std::move(children);
    std::sort(n.children.begin(), n.children.end(), [](const DiagramNode &a, const DiagramNode &b) {
        return a.min_qubit() < b.min_qubit();
    });
    return n;
}

QubitSet DiagramNode::qubits() const {
    if (is_leaf()) {
        return QubitSet{qubit};
    }
    std::vector<uint32_t> out;
    std::vector<const DiagramNode *> todo{this};
    while (!todo.empty()) {
        const DiagramNode *n = todo.back();
        todo.pop_back();
        if (n->is_leaf()) {
            out.push_back(n->qubit);
        } else {
            for (const DiagramNode &c : n->children) {
                todo.push_back(&c);
            }
        }
    }
    return QubitSet(std::move(out));
}

uint32_t DiagramNode::min_qubit() const {
    if (is_leaf()) {
        return qubit;
    }
    uint32_t best = UINT32_MAX;
    for (const DiagramNode &c : children) {
        best = std::min(best, c.min_qubit());
    }
    return best;
}

size_t DiagramNode::cluster_count() const {
    if (is_leaf()) {
        return 0;
    }
    size_t total = 1;
    for (const DiagramNode &c : children) {
        total += c.cluster_count();
    }
    return total;
}

std::vector<QubitSet> entstruct::merge_overlaps(const std::vector<QubitSet> &sets) {
    std::map<uint32_t, size_t> index_of;
    for (const QubitSet &s : sets) {
        for (uint32_t q : s) {
            index_of.emplace(q, index_of.size());
        }
    }
    UnionFind uf(index_of.size());
    for (const QubitSet &s : sets) {
        for (size_t k = 1; k < s.size(); k++) {
            uf.unite(index_of[s[0]], index_of[s[k]]);
        }
    }
    std::map<size_t, std::vector<uint32_t>> groups;
    for (const auto &[q, idx] : index_of) {
        groups[uf.find(idx)].push_back(q);
    }
    std::vector<QubitSet> out;
    for (auto &[root, members] : groups) {
        out.emplace_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const QubitSet &a, const QubitSet &b) { return a.front() < b.front(); });
    return out;
}

namespace {

struct ScanElement {
    QubitSet qubits;
    size_t entropy = 0;
    // Round in which the element was formed; used only for pruning.
    uint32_t birth = 0;
};

// Depth-first enumeration of w-subsets sharing one incrementally grown GF(2) basis per depth, so
// each subset costs a single element insertion on top of its prefix.
class SubsetScanner {
   public:
    SubsetScanner(const EntropyCalculator &calc, const std::vector<ScanElement> &elems, const std::vector<uint32_t> &order, size_t w)
        : calc_(calc), elems_(elems), order_(order), w_(w), stack_(w + 1, XorBasis(calc.num_generators())), chosen_(w) {
    }

    void scan_from(size_t first_pos) {
        uint32_t e = order_[first_pos];
        stack_[1] = stack_[0];
        add(stack_[1], e);
        chosen_[0] = e;
        recurse(1, first_pos + 1, elems_[e].entropy, elems_[e].qubits.size());
    }

    std::vector<ElementSet> &found() {
        return found_;
    }

   private:
    void add(XorBasis &basis, uint32_t e) {
        for (uint32_t q : elems_[e].qubits) {
            calc_.insert_qubit(basis, q);
        }
    }

    void recurse(size_t depth, size_t start, size_t sum_entropy, size_t sum_qubits) {
        size_t last = order_.size() - (w_ - depth);
        for (size_t p = start; p <= last; p++) {
            uint32_t e = order_[p];
            stack_[depth + 1] = stack_[depth];
            add(stack_[depth + 1], e);
            chosen_[depth] = e;
            size_t s = sum_entropy + elems_[e].entropy;
            size_t nq = sum_qubits + elems_[e].qubits.size();
            if (depth + 1 == w_) {
                size_t joint = stack_[w_].size() - nq;
                if (s > joint) {
                    ElementSet set(chosen_.begin(), chosen_.end());
                    std::sort(set.begin(), set.end());
                    found_.push_back(std::move(set));
                }
            } else {
                recurse(depth + 1, p + 1, s, nq);
            }
        }
    }

    const EntropyCalculator &calc_;
    const std::vector<ScanElement> &elems_;
    const std::vector<uint32_t> &order_;
    size_t w_;
    std::vector<XorBasis> stack_;
    std::vector<uint32_t> chosen_;
    std::vector<ElementSet> found_;
};

unsigned resolve_threads(unsigned threads) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    return threads;
}

// Returns indices (into elems) of every w-subset with nonzero total correlations, sorted.
// known_zero(b) is the largest weight at which all subsets of elements born no later than round b
// are already known to have vanishing total correlations.
template <typename KnownZero>
std::vector<ElementSet> scan_level(
    const EntropyCalculator &calc, const std::vector<ScanElement> &elems, size_t w, bool prune, KnownZero known_zero, unsigned threads) {
    std::vector<uint32_t> order(elems.size());
    for (uint32_t i = 0; i < order.size(); i++) {
        order[i] = i;
    }
    if (prune) {
        // Newest first: once the newest chosen element is old enough to be covered by an earlier
        // scan, so is every subset that starts later in this order.
        std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) { return elems[a].birth > elems[b].birth; });
    }
    size_t first_limit = elems.size() - w + 1;
    if (prune) {
        size_t p = 0;
        while (p < first_limit && known_zero(elems[order[p]].birth) < w) {
            p++;
        }
        first_limit = p;
    }

    threads = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<size_t>(first_limit, 1)));
    std::vector<ElementSet> found;
    if (threads <= 1) {
        SubsetScanner scanner(calc, elems, order, w);
        for (size_t p = 0; p < first_limit; p++) {
            scanner.scan_from(p);
        }
        found = std::move(scanner.found());
    } else {
        std::vector<std::vector<ElementSet>> per_thread(threads);
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < threads; t++) {
            workers.emplace_back([&, t]() {
                SubsetScanner scanner(calc, elems, order, w);
                for (size_t p = t; p < first_limit; p += threads) {
                    scanner.scan_from(p);
                }
                per_thread[t] = std::move(scanner.found());
            });
        }
        for (std::thread &worker : workers) {
            worker.join();
        }
        for (auto &part : per_thread) {
            found.insert(found.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

struct LiveElement {
    DiagramNode node;
    ScanElement scan;
};

}  // namespace

std::vector<ElementSet> entstruct::find_indivisible_sets(
    const StabilizerTableau &t, const std::vector<Element> &elements, size_t w, unsigned threads) {
    if (w < 2 || w > elements.size()) {
        throw std::invalid_argument("subset weight must satisfy 2 <= w <= number of elements");
    }
    EntropyCalculator calc(t);
    std::vector<ScanElement> elems;
    std::vector<uint8_t> used(t.num_qubits(), 0);
    for (const Element &e : elements) {
        for (uint32_t q : e.qubits) {
            if (q >= t.num_qubits()) {
                throw std::invalid_argument("element qubit out of range");
            }
            if (used[q]) {
                throw std::invalid_argument("elements overlap on qubit " + std::to_string(q + 1));
            }
            used[q] = 1;
        }
        elems.push_back({e.qubits, calc.entropy_bits(e.qubits), 0});
    }
    auto never = [](uint32_t) { return size_t{0}; };
    std::vector<ElementSet> by_index = scan_level(calc, elems, w, false, never, threads);
    std::vector<ElementSet> out;
    out.reserve(by_index.size());
    for (const ElementSet &s : by_index) {
        ElementSet ids;
        for (uint32_t i : s) {
            ids.push_back(elements[i].id);
        }
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Diagram entstruct::build_diagram(const StabilizerTableau &t, const ClusteringOptions &options) {
    t.validate();
    const uint32_t n = static_cast<uint32_t>(t.num_qubits());
    EntropyCalculator calc(t);

    Diagram diagram;
    diagram.n = n;

    std::vector<LiveElement> live;
    for (uint32_t q = 0; q < n; q++) {
        QubitSet qs{q};
        size_t s = calc.entropy_bits(qs);
        live.push_back({DiagramNode::leaf(q), {std::move(qs), s, 0}});
    }

    // scanned_levels[r] is the weight at which the Step-4 scan of round r succeeded.
    std::vector<uint32_t> scanned_levels;
    auto known_zero = [&scanned_levels](uint32_t birth) {
        size_t best = 0;
        for (size_t r = birth; r < scanned_levels.size(); r++) {
            best = std::max<size_t>(best, scanned_levels[r]);
        }
        return best;
    };

    for (uint32_t round = 0;; round++) {
        // Finalize decoupled elements.
        std::vector<LiveElement> remaining;
        for (LiveElement &e : live) {
            if (e.scan.entropy == 0) {
                e.node.decoupled = true;
                diagram.roots.push_back(std::move(e.node));
            } else {
                remaining.push_back(std::move(e));
            }
        }
        live = std::move(remaining);
        if (live.empty()) {
            break;
        }
        if (live.size() == 1) {
            // Unreachable for a pure state (the last element has zero entropy), kept as a loop guard.
            live.front().node.decoupled = true;
            diagram.roots.push_back(std::move(live.front().node));
            break;
        }

        std::sort(live.begin(), live.end(), [](const LiveElement &a, const LiveElement &b) {
            return a.scan.qubits.front() < b.scan.qubits.front();
        });
        std::vector<ScanElement> elems;
        elems.reserve(live.size());
        for (const LiveElement &e : live) {
            elems.push_back(e.scan);
        }

        std::vector<ElementSet> sets;
        uint32_t w = 2;
        for (; w <= live.size(); w++) {
            sets = scan_level(calc, elems, w, options.prune, known_zero, options.threads);
            if (!sets.empty()) {
                break;
            }
        }
        if (sets.empty()) {
            throw std::logic_error("no indivisible set found among live elements; entropies are inconsistent");
        }
        scanned_levels.push_back(w);

        if (round == 0) {
            for (const ElementSet &s : sets) {
                QubitSet qs;
                for (uint32_t i : s) {
                    qs = qs.united(elems[i].qubits);
                }
                diagram.first_round_sets.push_back({std::move(qs), w});
            }
        }

        UnionFind uf(live.size());
        std::vector<uint8_t> merged(live.size(), 0);
        for (const ElementSet &s : sets) {
            for (uint32_t i : s) {
                merged[i] = 1;
                uf.unite(s.front(), i);
            }
        }
        std::map<size_t, std::vector<size_t>> components;
        for (size_t i = 0; i < live.size(); i++) {
            if (merged[i]) {
                components[uf.find(i)].push_back(i);
            }
        }

        std::vector<LiveElement> next;
        for (size_t i = 0; i < live.size(); i++) {
            if (!merged[i]) {
                next.push_back(std::move(live[i]));
            }
        }
        for (auto &[root, members] : components) {
            std::vector<DiagramNode> children;
            QubitSet qs;
            for (size_t i : members) {
                qs = qs.united(live[i].scan.qubits);
                children.push_back(std::move(live[i].node));
            }
            size_t s = calc.entropy_bits(qs);
            next.push_back({DiagramNode::cluster(w, std::move(children)), {std::move(qs), s, round + 1}});
        }
        live = std::move(next);
    }

    std::sort(diagram.roots.begin(), diagram.roots.end(), [](const DiagramNode &a, const DiagramNode &b) {
        return a.min_qubit() < b.min_qubit();
    });
    return diagram;
}
