#include "cyclotrig/basis.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <mutex>
#include <utility>

namespace cyclotrig {

namespace {

bool is_two_power(std::uint64_t q) { return q != 0 && (q & (q - 1)) == 0; }

// Largest prime divisor check for an odd prime power: q = p^k.
std::uint64_t prime_of(std::uint64_t q) {
    Factorization f = factorize(q);
    if (f.size() != 1) throw std::invalid_argument("not a prime power");
    return f[0].prime;
}

}  // namespace

std::size_t key_parity(BasisKey const& key) {
    std::size_t b = 0;
    for (auto const& atom : key)
        if (atom.part == Part::B) ++b;
    return b % 2;
}

bool key_valid(BasisKey const& key, Factorization const& f) {
    if (key.size() != f.size()) return false;
    for (std::size_t i = 0; i < key.size(); ++i) {
        std::uint64_t q = f[i].value();
        auto const& [part, e] = key[i];
        if (q <= 2) {
            if (part != Part::A || e != 0) return false;
        } else if (f[i].prime == 2) {
            std::uint64_t quarter = q / 4;
            if (part == Part::A ? e >= quarter : (e == 0 || e > quarter)) return false;
        } else {
            std::uint64_t half_phi = euler_phi(q) / 2;
            if (e == 0 || e > half_phi) return false;
        }
    }
    return true;
}

std::string key_to_string(BasisKey const& key, Factorization const& f) {
    if (key.size() != f.size()) throw std::invalid_argument("key/factorization mismatch");
    if (key.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i > 0) out += '*';
        out += key[i].part == Part::A ? 'A' : 'B';
        out += std::to_string(f[i].value());
        out += '.';
        out += std::to_string(key[i].exponent);
    }
    return out;
}

BasisKey key_from_string(std::string_view s, Factorization const& f) {
    BasisKey key;
    if (s != "1") {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t next = s.find('*', pos);
            std::string_view tok = s.substr(pos, next == std::string_view::npos ? next : next - pos);
            if (tok.size() < 4 || (tok[0] != 'A' && tok[0] != 'B'))
                throw std::invalid_argument("bad basis atom: " + std::string(tok));
            std::size_t dot = tok.find('.');
            if (dot == std::string_view::npos)
                throw std::invalid_argument("bad basis atom: " + std::string(tok));
            std::uint64_t q = 0;
            std::uint32_t e = 0;
            auto qres = std::from_chars(tok.data() + 1, tok.data() + dot, q);
            auto eres = std::from_chars(tok.data() + dot + 1, tok.data() + tok.size(), e);
            if (qres.ec != std::errc{} || eres.ec != std::errc{} ||
                qres.ptr != tok.data() + dot || eres.ptr != tok.data() + tok.size())
                throw std::invalid_argument("bad basis atom: " + std::string(tok));
            std::size_t i = key.size();
            if (i >= f.size() || f[i].value() != q)
                throw std::invalid_argument("atom prime power does not match conductor");
            key.push_back({tok[0] == 'A' ? Part::A : Part::B, e});
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
    }
    if (!key_valid(key, f)) throw std::invalid_argument("invalid basis key for conductor");
    return key;
}

Rational CoordVector::coefficient(BasisKey const& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? Rational(0) : it->second;
}

void CoordVector::add(BasisKey const& key, Rational const& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = entries_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) entries_.erase(it);
    }
}

CoordVector& CoordVector::operator+=(CoordVector const& other) {
    if (n_ != other.n_) throw std::invalid_argument("conductor mismatch");
    for (auto const& [key, coeff] : other.entries_) add(key, coeff);
    return *this;
}

CoordVector& CoordVector::operator*=(Rational const& scale) {
    if (scale == 0) {
        entries_.clear();
    } else {
        for (auto& [key, coeff] : entries_) coeff *= scale;
    }
    return *this;
}

CoordVector CoordVector::operator-() const {
    CoordVector out(n_);
    for (auto const& [key, coeff] : entries_) out.entries_.emplace(key, -coeff);
    return out;
}

BasisDescriptor build_basis(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("build_basis requires n >= 1");
    BasisDescriptor d;
    d.n = n;
    d.factorization = factorize(n);

    std::vector<BasisKey> keys{BasisKey{}};
    for (auto const& pp : d.factorization) {
        std::uint64_t q = pp.value();
        std::vector<BasisAtom> atoms;
        if (q == 2) {
            atoms.push_back({Part::A, 0});
        } else if (pp.prime == 2) {
            std::uint64_t quarter = q / 4;
            for (std::uint64_t e = 0; e < quarter; ++e)
                atoms.push_back({Part::A, static_cast<std::uint32_t>(e)});
            for (std::uint64_t e = 1; e <= quarter; ++e)
                atoms.push_back({Part::B, static_cast<std::uint32_t>(e)});
        } else {
            std::uint64_t half_phi = euler_phi(q) / 2;
            for (std::uint64_t e = 1; e <= half_phi; ++e)
                atoms.push_back({Part::A, static_cast<std::uint32_t>(e)});
            for (std::uint64_t e = 1; e <= half_phi; ++e)
                atoms.push_back({Part::B, static_cast<std::uint32_t>(e)});
        }
        std::vector<BasisKey> next;
        next.reserve(keys.size() * atoms.size());
        for (auto const& k : keys)
            for (auto const& a : atoms) {
                BasisKey nk = k;
                nk.push_back(a);
                next.push_back(std::move(nk));
            }
        keys = std::move(next);
    }
    d.keys = std::move(keys);
    assert(d.keys.size() == euler_phi(d.factorization));
    return d;
}

std::shared_ptr<BasisDescriptor const> cached_basis(std::uint64_t n) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::shared_ptr<BasisDescriptor const>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto fresh = std::make_shared<BasisDescriptor const>(build_basis(n));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace(n, std::move(fresh));
    return it->second;
}

LocalDecomposition decompose_prime_power(std::uint64_t q, std::int64_t s_in) {
    std::uint64_t p = prime_of(q);
    if (p == 2) throw std::invalid_argument("decompose_prime_power requires an odd prime power");
    std::uint64_t s = mod_reduce(s_in, q);
    std::uint64_t half_phi = euler_phi(q) / 2;     // phi(q)/2 = p^{k-1}(p-1)/2
    std::uint64_t layer = q / p;                   // p^{k-1}

    LocalDecomposition out;
    auto atom_e = [](std::uint64_t e) { return static_cast<std::uint32_t>(e); };

    if (s == 0) {
        // 1 = -2*Re(omega^layer) - 2*Re(omega^{2*layer}) - ... ((p-1)/2 terms),
        // from the vanishing sum over the p-th roots inside omega_q.
        for (std::uint64_t j = 1; j <= (p - 1) / 2; ++j)
            out.re[{Part::A, atom_e(j * layer)}] = -2;
    } else if (s <= half_phi) {
        out.re[{Part::A, atom_e(s)}] = 1;
        out.im[{Part::B, atom_e(s)}] = 1;
    } else if (s >= q - half_phi) {
        out.re[{Part::A, atom_e(q - s)}] = 1;
        out.im[{Part::B, atom_e(q - s)}] = -1;
    } else {
        // The gap: omega^s = -sum_{j != r} omega^{j*layer + s0}, every
        // summand falling in one of the direct ranges above.
        std::uint64_t s0 = s % layer;
        std::uint64_t r = s / layer;
        assert(s0 != 0);
        for (std::uint64_t j = 0; j < p; ++j) {
            if (j == r) continue;
            std::uint64_t e = j * layer + s0;
            assert(e != 0 && e < q);
            if (e <= half_phi) {
                out.re[{Part::A, atom_e(e)}] -= 1;
                out.im[{Part::B, atom_e(e)}] -= 1;
            } else {
                assert(e >= q - half_phi);
                out.re[{Part::A, atom_e(q - e)}] -= 1;
                out.im[{Part::B, atom_e(q - e)}] += 1;
            }
        }
    }
    return out;
}

LocalDecomposition decompose_two_power(std::uint64_t q, std::int64_t s_in) {
    if (!is_two_power(q)) throw std::invalid_argument("decompose_two_power requires a power of two");
    std::uint64_t s = mod_reduce(s_in, q);
    LocalDecomposition out;
    if (q <= 2) {
        out.re[{Part::A, 0}] = (s == 0) ? 1 : -1;
        return out;
    }
    std::uint64_t quarter = q / 4;
    bool conjugate = false;
    if (s > 2 * quarter) {  // lower half plane: conjugate of q - s
        s = q - s;
        conjugate = true;
    }
    if (s <= quarter) {
        if (s < quarter) out.re[{Part::A, static_cast<std::uint32_t>(s)}] = 1;
        if (s > 0) out.im[{Part::B, static_cast<std::uint32_t>(s)}] = 1;
    } else {  // second quadrant: omega^s = -conj(omega^{2*quarter - s})
        std::uint64_t e = 2 * quarter - s;
        out.re[{Part::A, static_cast<std::uint32_t>(e)}] = -1;
        if (e > 0) out.im[{Part::B, static_cast<std::uint32_t>(e)}] = 1;
    }
    if (conjugate)
        for (auto& [atom, c] : out.im) c = -c;
    return out;
}

RootDecomposition decompose_root(std::uint64_t n, std::int64_t t) {
    if (n == 0) throw std::invalid_argument("decompose_root requires n >= 1");
    Factorization f = factorize(n);
    std::vector<CrtComponent> comps = crt_components(f, t);

    // Expand prod_i (Re_i + iIm_i) one factor at a time.  re maps touch only
    // A atoms and im maps only B atoms, so no two expansion paths collide.
    std::vector<std::pair<BasisKey, std::int64_t>> acc{{BasisKey{}, 1}};
    for (std::size_t i = 0; i < comps.size(); ++i) {
        LocalDecomposition local =
            f[i].prime == 2
                ? decompose_two_power(comps[i].modulus, static_cast<std::int64_t>(comps[i].residue))
                : decompose_prime_power(comps[i].modulus, static_cast<std::int64_t>(comps[i].residue));
        std::vector<std::pair<BasisKey, std::int64_t>> next;
        next.reserve(acc.size() * (local.re.size() + local.im.size()));
        for (auto const& [key, coeff] : acc) {
            for (auto const* part : {&local.re, &local.im})
                for (auto const& [atom, d] : *part) {
                    BasisKey nk = key;
                    nk.push_back(atom);
                    next.emplace_back(std::move(nk), coeff * d);
                }
        }
        acc = std::move(next);
    }

    RootDecomposition out{CoordVector(n), CoordVector(n)};
    for (auto& [key, coeff] : acc) {
        assert(key_valid(key, f));
        (key_parity(key) == 0 ? out.re : out.im).add(key, Rational(coeff));
    }
    return out;
}

std::optional<Rational> proportionality(CoordVector const& u, CoordVector const& v) {
    if (v.is_zero()) throw ZeroDenominatorVector("proportionality: v is the zero vector");
    if (u.conductor() != v.conductor())
        throw std::invalid_argument("proportionality: conductor mismatch");

    auto const& ve = v.entries();
    Rational lambda = u.coefficient(ve.begin()->first) / ve.begin()->second;
    for (auto const& [key, coeff] : ve)
        if (u.coefficient(key) != lambda * coeff) return std::nullopt;
    for (auto const& [key, coeff] : u.entries())
        if (!ve.contains(key)) return std::nullopt;  // lambda * 0 != coeff
    return lambda;
}

}  // namespace cyclotrig
