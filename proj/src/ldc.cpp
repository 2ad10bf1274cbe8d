// coopic — rate-region toolkit for the two-user Gaussian interference channel
// with conferencing decoders
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "coopic/ldc.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace coopic {

namespace {

using Mask = std::uint32_t;  // columns 0..2q-1, q <= 16

// GF(2) row space with membership queries.
class XorBasis {
  public:
    void insert(Mask v) {
        v = reduce(v);
        if (v == 0) return;
        rows_.push_back(v);
        std::sort(rows_.begin(), rows_.end(), std::greater<>());
    }
    bool spans(Mask v) const { return reduce(v) == 0; }
    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    Mask reduce(Mask v) const {
        for (Mask r : rows_) {
            const Mask high = Mask{1} << (31 - std::countl_zero(r));
            if (v & high) v ^= r;
        }
        return v;
    }
    std::vector<Mask> rows_;  // kept sorted, distinct leading bits
};

int col_of(int user, int level, int q) { return (user == 1 ? 0 : q) + level - 1; }

// Received-vector row masks for receiver `rx`, restricted to placed bits.
std::vector<Mask> receiver_rows(const LdcChannel& ch, int rx, Mask place1, Mask place2) {
    const int q = ch.q;
    const int n_own = (rx == 1) ? ch.n11 : ch.n22;
    const int n_cross = (rx == 1) ? ch.n12 : ch.n21;
    const int own_user = rx;
    const int cross_user = 3 - rx;
    const Mask own_place = (rx == 1) ? place1 : place2;
    const Mask cross_place = (rx == 1) ? place2 : place1;

    std::vector<Mask> rows(static_cast<std::size_t>(q), 0);
    for (int r = 1; r <= q; ++r) {
        Mask m = 0;
        const int own_lvl = r - (q - n_own);
        if (own_lvl >= 1 && own_lvl <= q && (own_place >> (own_lvl - 1) & 1u))
            m ^= Mask{1} << col_of(own_user, own_lvl, q);
        const int cross_lvl = r - (q - n_cross);
        if (cross_lvl >= 1 && cross_lvl <= q && (cross_place >> (cross_lvl - 1) & 1u))
            m ^= Mask{1} << col_of(cross_user, cross_lvl, q);
        rows[static_cast<std::size_t>(r - 1)] = m;
    }
    return rows;
}

std::vector<int> placed_cols(Mask place, int user, int q) {
    std::vector<int> cols;
    for (int l = 1; l <= q; ++l)
        if (place >> (l - 1) & 1u) cols.push_back(col_of(user, l, q));
    return cols;
}

std::string bit_name(int col, int q) {
    return (col < q) ? "a" + std::to_string(col + 1) : "b" + std::to_string(col - q + 1);
}

// Value of one cooperation bit as a linear form over the message bits.
Mask coop_mask(const LdcCoopBit& c, const std::vector<Mask>& sender_rows, int q,
               std::string* err) {
    Mask m = 0;
    if (c.mode == LdcCoopBit::Mode::Raw) {
        for (int r : c.rows) {
            if (r < 1 || r > q) {
                *err = "raw combination row index out of range";
                return 0;
            }
            m ^= sender_rows[static_cast<std::size_t>(r - 1)];
        }
    } else {
        for (int col : c.bit_cols) m ^= Mask{1} << col;
    }
    return m;
}

struct StageError {
    std::string msg;
};

// Targets the middle decoder must resolve so its decoded forwarding is valid.
std::optional<StageError> decoded_targets(const std::vector<LdcCoopBit>& coop, Mask place1,
                                          Mask place2, int q, std::vector<int>* targets) {
    for (const auto& c : coop) {
        if (c.mode != LdcCoopBit::Mode::Decoded) continue;
        for (int col : c.bit_cols) {
            if (col < 0 || col >= 2 * q) return StageError{"decoded bit out of range"};
            const bool placed = (col < q) ? (place1 >> col & 1u) : (place2 >> (col - q) & 1u);
            if (!placed) return StageError{"decoded combination references an unplaced bit"};
            targets->push_back(col);
        }
    }
    return std::nullopt;
}

bool all_decodable(const std::vector<Mask>& rows, const std::vector<Mask>& extra,
                   const std::vector<int>& target_cols, int* bad_col) {
    XorBasis basis;
    for (Mask r : rows) basis.insert(r);
    for (Mask r : extra) basis.insert(r);
    for (int col : target_cols) {
        if (!basis.spans(Mask{1} << col)) {
            *bad_col = col;
            return false;
        }
    }
    return true;
}

}  // namespace

LdcChannel LdcChannel::make(int q, int n11, int n22, int n12, int n21, int k12, int k21) {
    if (q < 1 || q > 16) throw std::invalid_argument("LdcChannel: q must be in 1..16");
    for (int n : {n11, n22, n12, n21})
        if (n < 0 || n > q) throw std::invalid_argument("LdcChannel: levels must be in 0..q");
    if (k12 < 0 || k21 < 0) throw std::invalid_argument("LdcChannel: negative cooperation budget");
    return LdcChannel{q, n11, n22, n12, n21, k12, k21};
}

LdcChannel LdcChannel::parse(const std::string& text) {
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    int q = -1, n11 = 0, n22 = 0, n12 = 0, n21 = 0, k12 = 0, k21 = 0;
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("LdcChannel: expected key=value, got " + tok);
        const std::string key = tok.substr(0, eq);
        const int val = std::stoi(tok.substr(eq + 1));
        if (key == "q") q = val;
        else if (key == "n11") n11 = val;
        else if (key == "n22") n22 = val;
        else if (key == "n12") n12 = val;
        else if (key == "n21") n21 = val;
        else if (key == "k12") k12 = val;
        else if (key == "k21") k21 = val;
        else throw std::invalid_argument("LdcChannel: unknown key " + key);
    }
    if (q < 0) throw std::invalid_argument("LdcChannel: q is required");
    return make(q, n11, n22, n12, n21, k12, k21);
}

std::string LdcChannel::format() const {
    std::ostringstream out;
    out << "q=" << q << " n11=" << n11 << " n22=" << n22 << " n12=" << n12 << " n21=" << n21
        << " k12=" << k12 << " k21=" << k21;
    return out.str();
}

LdcScheme LdcScheme::parse(const std::string& text, int q) {
    LdcScheme sch;
    std::istringstream in(text);
    std::string line;
    auto parse_bit = [q](const std::string& name) {
        if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b'))
            throw std::invalid_argument("LdcScheme: bad bit name " + name);
        const int level = std::stoi(name.substr(1));
        if (level < 1 || level > q)
            throw std::invalid_argument("LdcScheme: level out of range in " + name);
        return std::pair<char, int>{name[0], level};
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "order") {
            std::string v;
            ls >> v;
            if (v == "one-round") sch.order = LdcOrder::OneRound;
            else if (v == "2-1-2") sch.order = LdcOrder::TwoRound212;
            else if (v == "1-2-1") sch.order = LdcOrder::TwoRound121;
            else throw std::invalid_argument("LdcScheme: unknown order " + v);
        } else if (head == "place1" || head == "place2") {
            Mask m = 0;
            std::string b;
            const char want = (head == "place1") ? 'a' : 'b';
            while (ls >> b) {
                const auto [user, level] = parse_bit(b);
                if (user != want)
                    throw std::invalid_argument("LdcScheme: " + head + " lists bit " + b);
                m |= Mask{1} << (level - 1);
            }
            (head == "place1" ? sch.place1 : sch.place2) = m;
        } else if (head == "coop1" || head == "coop2") {
            std::string mode, expr, tok;
            ls >> mode;
            while (ls >> tok) expr += tok;
            LdcCoopBit c;
            std::string term;
            std::istringstream es(expr);
            if (mode == "raw") {
                c.mode = LdcCoopBit::Mode::Raw;
                while (std::getline(es, term, '+')) c.rows.push_back(std::stoi(term));
            } else if (mode == "decoded") {
                c.mode = LdcCoopBit::Mode::Decoded;
                while (std::getline(es, term, '+')) {
                    const auto [user, level] = parse_bit(term);
                    c.bit_cols.push_back(col_of(user == 'a' ? 1 : 2, level, q));
                }
            } else {
                throw std::invalid_argument("LdcScheme: coop mode must be raw or decoded");
            }
            (head == "coop1" ? sch.coop1 : sch.coop2).push_back(std::move(c));
        } else {
            throw std::invalid_argument("LdcScheme: unknown directive " + head);
        }
    }
    return sch;
}

std::string LdcScheme::format(int q) const {
    std::ostringstream out;
    switch (order) {
        case LdcOrder::OneRound: out << "order one-round\n"; break;
        case LdcOrder::TwoRound212: out << "order 2-1-2\n"; break;
        case LdcOrder::TwoRound121: out << "order 1-2-1\n"; break;
    }
    out << "place1";
    for (int l = 1; l <= q; ++l)
        if (place1 >> (l - 1) & 1u) out << " a" << l;
    out << "\nplace2";
    for (int l = 1; l <= q; ++l)
        if (place2 >> (l - 1) & 1u) out << " b" << l;
    out << "\n";
    auto emit = [&](const char* name, const std::vector<LdcCoopBit>& coop) {
        for (const auto& c : coop) {
            out << name << (c.mode == LdcCoopBit::Mode::Raw ? " raw " : " decoded ");
            bool first = true;
            if (c.mode == LdcCoopBit::Mode::Raw) {
                for (int r : c.rows) {
                    out << (first ? "" : "+") << r;
                    first = false;
                }
            } else {
                for (int col : c.bit_cols) {
                    out << (first ? "" : "+") << bit_name(col, q);
                    first = false;
                }
            }
            out << "\n";
        }
    };
    emit("coop1", coop1);
    emit("coop2", coop2);
    return out.str();
}

LdcCheckResult check_scheme(const LdcChannel& ch, const LdcScheme& scheme) {
    const int q = ch.q;
    LdcCheckResult res;
    if (scheme.place1 >> q || scheme.place2 >> q) {
        res.error = "placement uses a level beyond q";
        return res;
    }
    if (static_cast<int>(scheme.coop1.size()) > ch.k12 ||
        static_cast<int>(scheme.coop2.size()) > ch.k21) {
        res.error = "cooperation budget exceeded";
        return res;
    }

    const auto y1 = receiver_rows(ch, 1, scheme.place1, scheme.place2);
    const auto y2 = receiver_rows(ch, 2, scheme.place1, scheme.place2);

    auto masks_of = [&](const std::vector<LdcCoopBit>& coop, const std::vector<Mask>& sender,
                        std::string* err) {
        std::vector<Mask> ms;
        for (const auto& c : coop) {
            ms.push_back(coop_mask(c, sender, q, err));
            if (!err->empty()) break;
        }
        return ms;
    };
    auto has_decoded = [](const std::vector<LdcCoopBit>& coop) {
        for (const auto& c : coop)
            if (c.mode == LdcCoopBit::Mode::Decoded) return true;
        return false;
    };

    const std::vector<int> own1 = placed_cols(scheme.place1, 1, q);
    const std::vector<int> own2 = placed_cols(scheme.place2, 2, q);

    std::string err;
    int bad = -1;
    auto fail_bit = [&](int rx, int col) {
        res.error = "receiver " + std::to_string(rx) + " cannot resolve bit " + bit_name(col, q);
        return res;
    };

    if (scheme.order == LdcOrder::OneRound) {
        if (has_decoded(scheme.coop1) || has_decoded(scheme.coop2)) {
            res.error = "decoded forwarding requires a two-round order";
            return res;
        }
        const auto c1 = masks_of(scheme.coop1, y1, &err);
        const auto c2 = masks_of(scheme.coop2, y2, &err);
        if (!err.empty()) {
            res.error = err;
            return res;
        }
        if (!all_decodable(y1, c2, own1, &bad)) return fail_bit(1, bad);
        if (!all_decodable(y2, c1, own2, &bad)) return fail_bit(2, bad);
    } else {
        const bool order212 = scheme.order == LdcOrder::TwoRound212;
        const auto& first_coop = order212 ? scheme.coop2 : scheme.coop1;   // raw leg
        const auto& second_coop = order212 ? scheme.coop1 : scheme.coop2;  // may be decoded
        const auto& first_rows = order212 ? y2 : y1;
        const auto& mid_rows = order212 ? y1 : y2;
        const auto& mid_own = order212 ? own1 : own2;
        const auto& last_own = order212 ? own2 : own1;
        const int mid_rx = order212 ? 1 : 2;
        const int last_rx = order212 ? 2 : 1;

        if (has_decoded(first_coop)) {
            res.error = "first-round sender has not decoded anything yet";
            return res;
        }
        const auto first_masks = masks_of(first_coop, first_rows, &err);
        if (!err.empty()) {
            res.error = err;
            return res;
        }
        std::vector<int> mid_targets = mid_own;
        if (auto se = decoded_targets(second_coop, scheme.place1, scheme.place2, q, &mid_targets)) {
            res.error = se->msg;
            return res;
        }
        if (!all_decodable(mid_rows, first_masks, mid_targets, &bad)) return fail_bit(mid_rx, bad);

        const auto second_masks = masks_of(second_coop, mid_rows, &err);
        if (!err.empty()) {
            res.error = err;
            return res;
        }
        if (!all_decodable(first_rows, second_masks, last_own, &bad)) return fail_bit(last_rx, bad);
    }

    res.ok = true;
    res.r1 = std::popcount(scheme.place1);
    res.r2 = std::popcount(scheme.place2);
    return res;
}

int ldc_sum_upper_bound(const LdcChannel& ch) {
    const Mask all = (Mask{1} << ch.q) - 1;
    XorBasis basis;
    for (Mask r : receiver_rows(ch, 1, all, all)) basis.insert(r);
    for (Mask r : receiver_rows(ch, 2, all, all)) basis.insert(r);
    return std::min(ch.n11 + ch.n22 + ch.k12 + ch.k21, basis.rank());
}

LdcSearchResult search_raw(const LdcChannel& ch, int max_bits_per_user) {
    if (ch.q > 6 || ch.k12 > 2 || ch.k21 > 2)
        throw std::invalid_argument("search_raw: tractability bound is q <= 6, k <= 2");
    const int q = ch.q;
    const int cap = std::clamp(max_bits_per_user, 0, q);

    // All distinct nonzero row combinations a receiver can forward, smallest
    // row sets first so witnesses stay readable.
    auto candidates = [q](const std::vector<Mask>& rows) {
        std::vector<std::pair<Mask, Mask>> out;  // (value over bits, row-index set)
        std::vector<Mask> combos;
        for (Mask f = 1; f < (Mask{1} << q); ++f) combos.push_back(f);
        std::sort(combos.begin(), combos.end(), [](Mask a, Mask b) {
            const int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        for (Mask f : combos) {
            Mask v = 0;
            for (int r = 0; r < q; ++r)
                if (f >> r & 1u) v ^= rows[static_cast<std::size_t>(r)];
            if (v == 0) continue;
            bool seen = false;
            for (const auto& [val, set] : out) seen = seen || val == v;
            if (!seen) out.emplace_back(v, f);
        }
        return out;
    };

    // Does some set of <= budget candidate rows make every target decodable?
    auto solve = [](const std::vector<Mask>& rows, const std::vector<int>& targets,
                    const std::vector<std::pair<Mask, Mask>>& cands, int budget,
                    std::vector<Mask>* picked) -> bool {
        int bad = -1;
        if (all_decodable(rows, {}, targets, &bad)) {
            picked->clear();
            return true;
        }
        if (budget >= 1) {
            for (const auto& [v, f] : cands) {
                if (all_decodable(rows, {v}, targets, &bad)) {
                    *picked = {f};
                    return true;
                }
            }
        }
        if (budget >= 2) {
            for (std::size_t i = 0; i < cands.size(); ++i) {
                for (std::size_t j = i + 1; j < cands.size(); ++j) {
                    if (all_decodable(rows, {cands[i].first, cands[j].first}, targets, &bad)) {
                        *picked = {cands[i].second, cands[j].second};
                        return true;
                    }
                }
            }
        }
        return false;
    };

    std::vector<std::pair<Mask, Mask>> placements;
    for (Mask p1 = 0; p1 < (Mask{1} << q); ++p1) {
        if (std::popcount(p1) > cap) continue;
        for (Mask p2 = 0; p2 < (Mask{1} << q); ++p2) {
            if (std::popcount(p2) > cap) continue;
            placements.emplace_back(p1, p2);
        }
    }
    std::sort(placements.begin(), placements.end(), [](const auto& a, const auto& b) {
        const int sa = std::popcount(a.first) + std::popcount(a.second);
        const int sb = std::popcount(b.first) + std::popcount(b.second);
        if (sa != sb) return sa > sb;
        return a < b;
    });

    auto rows_to_coop = [](const std::vector<Mask>& row_sets, int qq) {
        std::vector<LdcCoopBit> coop;
        for (Mask f : row_sets) {
            LdcCoopBit c;
            c.mode = LdcCoopBit::Mode::Raw;
            for (int r = 1; r <= qq; ++r)
                if (f >> (r - 1) & 1u) c.rows.push_back(r);
            coop.push_back(std::move(c));
        }
        return coop;
    };

    for (const auto& [p1, p2] : placements) {
        const auto y1 = receiver_rows(ch, 1, p1, p2);
        const auto y2 = receiver_rows(ch, 2, p1, p2);
        const auto own1 = placed_cols(p1, 1, q);
        const auto own2 = placed_cols(p2, 2, q);

        // Receiver 1 is helped by combinations of y2 and vice versa.
        std::vector<Mask> pick_for_rx1, pick_for_rx2;
        if (!solve(y1, own1, candidates(y2), ch.k21, &pick_for_rx1)) continue;
        if (!solve(y2, own2, candidates(y1), ch.k12, &pick_for_rx2)) continue;

        LdcSearchResult res;
        res.r1 = std::popcount(p1);
        res.r2 = std::popcount(p2);
        res.sum = res.r1 + res.r2;
        res.scheme.order = LdcOrder::OneRound;
        res.scheme.place1 = p1;
        res.scheme.place2 = p2;
        res.scheme.coop1 = rows_to_coop(pick_for_rx2, q);
        res.scheme.coop2 = rows_to_coop(pick_for_rx1, q);
        return res;
    }
    return LdcSearchResult{};  // empty placement always succeeds, not reached
}

}  // namespace coopic
