#include "trisector/isosig.hpp"

#include <cctype>
#include <vector>

namespace trisector {

char isosig_char(int value) {
    if (value < 26) return static_cast<char>('a' + value);
    if (value < 52) return static_cast<char>('A' + value - 26);
    if (value < 62) return static_cast<char>('0' + value - 52);
    return value == 62 ? '+' : '-';
}

int isosig_value(char c) {
    if (c >= 'a' && c <= 'z') return c - 'a';
    if (c >= 'A' && c <= 'Z') return c - 'A' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '-') return 63;
    return -1;
}

namespace {

// Wire layout of one signature:
//
//   [size][type entries][join destinations][join permutations]
//
// size: n as one char if n < 63, otherwise '-', the digit count, and n
// in little-endian base 64.  Type entries: one 2-bit entry per facet
// visited on the canonical walk that is not the back side of a known
// gluing (0 boundary, 1 gluing to the next unseen pentachoron via the
// identity, 2 gluing to an already-seen pentachoron), packed three per
// char, low bits first.  Each type-2 entry contributes a destination
// (as many chars as the size used) and a permutation rank in two chars,
// low char first.
struct SigLayout {
    int n = 0;
    int destDigits = 1;
    std::size_t prefixLen = 1;
    std::size_t actions = 0;
    std::size_t joins = 0;
    std::size_t typeOff = 0, destOff = 0, permOff = 0, total = 0;
};

SigLayout layout_for(const Triangulation& t) {
    SigLayout L;
    L.n = t.size();
    if (L.n < 63) {
        L.destDigits = 1;
        L.prefixLen = 1;
    } else {
        int digits = 0;
        for (long v = L.n; v > 0; v >>= 6) ++digits;
        L.destDigits = digits;
        L.prefixLen = 2 + static_cast<std::size_t>(digits);
    }
    const std::size_t boundary =
        static_cast<std::size_t>(t.boundary_facet_count());
    const std::size_t gluings = (5u * L.n - boundary) / 2;
    L.joins = gluings - (L.n - 1);
    L.actions = boundary + gluings;
    L.typeOff = L.prefixLen;
    L.destOff = L.typeOff + (L.actions + 2) / 3;
    L.permOff = L.destOff + L.joins * L.destDigits;
    L.total = L.permOff + 2 * L.joins;
    return L;
}

void write_prefix(const SigLayout& L, char* out) {
    if (L.n < 63) {
        out[0] = isosig_char(L.n);
        return;
    }
    out[0] = isosig_char(63);
    out[1] = isosig_char(L.destDigits);
    long v = L.n;
    for (int i = 0; i < L.destDigits; ++i) {
        out[2 + i] = isosig_char(static_cast<int>(v & 63));
        v >>= 6;
    }
}

// Writes the encoding produced by the canonical walk rooted at
// (start, p0) into out[0..L.total).  Pentachora are relabelled in
// discovery order; vm[s] maps original vertex labels of s to relabelled
// ones, so every type-1 gluing becomes the identity.
void write_candidate(const Triangulation& t, const SigLayout& L, int start,
                     const Perm5& p0, char* out) {
    const int n = L.n;
    write_prefix(L, out);

    std::vector<int> image(n, -1), preimage(n, -1);
    std::vector<Perm5> vm(n), vmi(n);
    image[start] = 0;
    preimage[0] = start;
    vm[start] = p0;
    vmi[start] = p0.inverse();
    int next = 1;

    std::size_t action = 0, join = 0;
    int typeAccum = 0;
    auto emit = [&](int e) {
        typeAccum |= e << (2 * (action % 3));
        ++action;
        if (action % 3 == 0) {
            out[L.typeOff + action / 3 - 1] = isosig_char(typeAccum);
            typeAccum = 0;
        }
    };

    for (int simpImg = 0; simpImg < n; ++simpImg) {
        const int src = preimage[simpImg];
        for (int facetImg = 0; facetImg < 5; ++facetImg) {
            const int facetSrc = vmi[src][facetImg];
            const Gluing& g = t.adjacent(src, facetSrc);
            if (g.boundary()) {
                emit(0);
                continue;
            }
            const int dest = g.pent;
            if (image[dest] < 0) {
                emit(1);
                image[dest] = next;
                preimage[next] = dest;
                ++next;
                vm[dest] = vm[src] * g.map.inverse();
                vmi[dest] = vm[dest].inverse();
            } else {
                const int di = image[dest];
                const int dfImg = vm[dest][g.map[facetSrc]];
                if (di < simpImg || (di == simpImg && dfImg < facetImg))
                    continue;  // back side of a recorded gluing
                emit(2);
                long v = di;
                for (int i = 0; i < L.destDigits; ++i) {
                    out[L.destOff + join * L.destDigits + i] =
                        isosig_char(static_cast<int>(v & 63));
                    v >>= 6;
                }
                const int rank = (vm[dest] * g.map * vmi[src]).lex_rank();
                out[L.permOff + 2 * join] = isosig_char(rank & 63);
                out[L.permOff + 2 * join + 1] = isosig_char(rank >> 6);
                ++join;
            }
        }
    }
    if (action % 3 != 0) out[L.typeOff + action / 3] = isosig_char(typeAccum);
}

}  // namespace

std::string encode_isosig(const Triangulation& t) {
    if (t.size() == 0)
        throw std::invalid_argument("encode: empty triangulation");
    if (!t.is_connected())
        throw std::invalid_argument("encode: triangulation is not connected");
    const SigLayout L = layout_for(t);
    std::string best(L.total, '\x7f'), cand(L.total, '\0');
    for (int start = 0; start < L.n; ++start)
        for (int r = 0; r < Perm5::group_order; ++r) {
            write_candidate(t, L, start, Perm5::from_lex_rank(r), cand.data());
            if (cand < best) best = cand;  // byte-wise comparison
        }
    return best;
}

Triangulation decode_isosig(std::string_view sig) {
    std::string s;
    s.reserve(sig.size());
    for (char c : sig)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;

    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (pos + k > s.size()) throw IsoSigError("truncated signature", s.size());
    };
    auto value_at = [&](std::size_t i) {
        const int v = isosig_value(s[i]);
        if (v < 0) throw IsoSigError("character outside the signature alphabet", i);
        return v;
    };

    need(1);
    long n = 0;
    int destDigits = 1;
    const int first = value_at(pos++);
    if (first < 63) {
        n = first;
    } else {
        need(1);
        destDigits = value_at(pos++);
        if (destDigits < 1 || destDigits > 8)
            throw IsoSigError("bad size digit count", pos - 1);
        need(static_cast<std::size_t>(destDigits));
        for (int i = 0; i < destDigits; ++i)
            n |= static_cast<long>(value_at(pos + i)) << (6 * i);
        pos += static_cast<std::size_t>(destDigits);
    }
    if (n < 1)
        throw IsoSigError("signature describes an empty triangulation", 0);
    if (n > (1 << 24)) throw IsoSigError("implausibly large size", 0);

    // Type entries, until all 5n facets are accounted for.
    const long facets = 5 * n;
    const std::size_t typeOff = pos;
    long covered = 0;
    std::vector<uint8_t> actions;
    std::size_t joins = 0;
    int buf = 0, bufLeft = 0;
    std::size_t bufPos = 0;
    while (covered < facets) {
        if (bufLeft == 0) {
            need(1);
            bufPos = pos;
            buf = value_at(pos++);
            bufLeft = 3;
        }
        const int e = buf & 3;
        buf >>= 2;
        --bufLeft;
        if (e == 3) throw IsoSigError("invalid type entry", bufPos);
        covered += (e == 0) ? 1 : 2;
        if (e == 2) ++joins;
        actions.push_back(static_cast<uint8_t>(e));
    }
    if (covered != facets)
        throw IsoSigError("type entries overrun the facet count", bufPos);
    if (buf != 0)
        throw IsoSigError("nonzero padding after the type entries", bufPos);

    const std::size_t destOff = pos;
    need(joins * destDigits + 2 * joins);
    std::vector<long> dests(joins);
    for (std::size_t j = 0; j < joins; ++j) {
        long v = 0;
        for (int i = 0; i < destDigits; ++i)
            v |= static_cast<long>(value_at(pos + i)) << (6 * i);
        pos += static_cast<std::size_t>(destDigits);
        if (v >= n)
            throw IsoSigError("gluing destination out of range",
                              destOff + j * destDigits);
        dests[j] = v;
    }
    const std::size_t permOff = pos;
    std::vector<int> ranks(joins);
    for (std::size_t j = 0; j < joins; ++j) {
        const int v = value_at(pos) + 64 * value_at(pos + 1);
        pos += 2;
        if (v >= Perm5::group_order)
            throw IsoSigError("permutation rank out of range", permOff + 2 * j);
        ranks[j] = v;
    }
    if (pos != s.size())
        throw IsoSigError("trailing characters after the signature", pos);

    // Replay the walk.
    Triangulation t(static_cast<int>(n));
    std::size_t ai = 0, ji = 0;
    long next = 1;
    for (int p = 0; p < n; ++p) {
        for (int f = 0; f < 5; ++f) {
            if (t.is_glued(p, f)) continue;
            if (ai >= actions.size())
                throw IsoSigError("type entries are inconsistent with the walk",
                                  typeOff);
            const int e = actions[ai];
            const std::size_t typePos = typeOff + ai / 3;
            ++ai;
            if (e == 0) continue;
            if (e == 1) {
                if (next >= n)
                    throw IsoSigError("no unseen pentachoron for a type-1 gluing",
                                      typePos);
                t.join(p, f, static_cast<int>(next), Perm5());
                ++next;
                continue;
            }
            const long dest = dests[ji];
            const Perm5 perm = Perm5::from_lex_rank(ranks[ji]);
            const std::size_t destPos = destOff + ji * destDigits;
            ++ji;
            if (dest >= next)
                throw IsoSigError("gluing destination not yet seen", destPos);
            const int df = perm[f];
            if (dest == p && df == f)
                throw IsoSigError("facet glued to itself", destPos);
            if (t.is_glued(static_cast<int>(dest), df))
                throw IsoSigError("conflicting gluing", destPos);
            t.join(p, f, static_cast<int>(dest), perm);
        }
    }
    if (ai != actions.size() || ji != joins)
        throw IsoSigError("type entries are inconsistent with the walk", typeOff);
    if (next != n)
        throw IsoSigError(
            "signature describes a disconnected triangulation "
            "(composite signatures are not supported)",
            typeOff);
    return t;
}

}  // namespace trisector
