#include "qrd/code.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "qrd/errors.hpp"
#include "qrd/subsets.hpp"

namespace qrd {

unsigned row_reduce(std::vector<std::vector<unsigned>>& rows, const Field& field) {
    if (rows.empty()) return 0;
    const std::size_t n = rows[0].size();
    unsigned rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const unsigned scale = field.inv(rows[rank][col]);
        for (std::size_t j = col; j < n; ++j) rows[rank][j] = field.mul(rows[rank][j], scale);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const unsigned factor = rows[r][col];
            for (std::size_t j = col; j < n; ++j)
                rows[r][j] = field.sub(rows[r][j], field.mul(factor, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

bool LinearCode::contains(const std::vector<unsigned>& word) const {
    if (word.size() != n) throw std::invalid_argument("contains: word length mismatch");
    std::vector<unsigned> w = word;
    for (const auto& row : generator) {
        // RREF row: locate its pivot column
        std::size_t p = 0;
        while (p < n && row[p] == 0) ++p;
        if (p == n) continue;
        if (w[p] == 0) continue;
        const unsigned factor = w[p];  // pivot entry is 1
        for (std::size_t j = p; j < n; ++j) w[j] = field->sub(w[j], field->mul(factor, row[j]));
    }
    return std::all_of(w.begin(), w.end(), [](unsigned c) { return c == 0; });
}

std::vector<unsigned> LinearCode::permute_word(const std::vector<unsigned>& word,
                                               const std::vector<std::uint8_t>& images) {
    std::vector<unsigned> out(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) out[images[i]] = word[i];
    return out;
}

bool LinearCode::has_extended_qr_labels() const {
    if (n < 3 || labels.size() != n || labels[0] != "inf") return false;
    for (unsigned i = 1; i < n; ++i)
        if (labels[i] != std::to_string(i - 1)) return false;
    return true;
}

Poly qr_generator_polynomial(const FieldPtr& field, unsigned p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("qr code length must be an odd prime");
    const unsigned q = field->order();
    if (q % p == 0) throw std::invalid_argument("qr code: p must not divide q");

    // Euler's criterion on q mod p
    std::uint64_t legendre = 1, acc = q % p;
    for (unsigned e = (p - 1) / 2; e != 0; e >>= 1) {
        if (e & 1) legendre = legendre * acc % p;
        acc = acc * acc % p;
    }
    if (legendre != 1)
        throw std::invalid_argument("quadratic residue code undefined: " + std::to_string(q) +
                                    " is not a quadratic residue modulo " + std::to_string(p));

    const unsigned m = multiplicative_order(q, p);
    FieldPtr splitting = Field::extension(field, m);
    const unsigned alpha = pth_root_of_unity(*splitting, p);

    std::set<unsigned> residues;
    for (unsigned l = 1; l < p; ++l) residues.insert(static_cast<unsigned>(static_cast<std::uint64_t>(l) * l % p));

    Poly g = Poly::constant(splitting, 1);
    for (unsigned l : residues) g = g * Poly::linear_root(splitting, splitting->pow(alpha, l));

    if (g.degree() != static_cast<int>((p - 1) / 2) || !g.is_monic())
        throw std::logic_error("qr generator: product has unexpected shape");

    if (splitting.get() == field.get()) return g;  // splitting degree 1, already over GF(q)

    std::vector<unsigned> coeffs(g.coefficients().size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const unsigned c = g.coefficient(static_cast<unsigned>(i));
        if (!splitting->in_base_field(c))
            throw std::logic_error("qr generator: coefficient escapes the base field (field construction bug)");
        coeffs[i] = splitting->project_to_base(c);
    }
    return Poly::from_coefficients(field, std::move(coeffs));
}

LinearCode build_cyclic_code(const Poly& g, unsigned p) {
    const FieldPtr& field = g.field();
    if (g.is_zero() || g.degree() > static_cast<int>(p)) throw std::invalid_argument("cyclic code: bad generator degree");
    Poly xn1 = Poly::x_power_minus_one(field, p);
    if (!xn1.divmod(g).second.is_zero())
        throw std::invalid_argument("cyclic code: generator does not divide x^p - 1");
    const unsigned k = p - static_cast<unsigned>(g.degree());
    if (k == 0) throw std::invalid_argument("cyclic code: zero code (generator equals x^p - 1)");

    LinearCode code;
    code.field = field;
    code.n = p;
    code.k = k;
    code.generator.assign(k, std::vector<unsigned>(p, 0));
    for (unsigned i = 0; i < k; ++i)
        for (int j = 0; j <= g.degree(); ++j)
            code.generator[i][i + static_cast<unsigned>(j)] = g.coefficient(static_cast<unsigned>(j));
    if (row_reduce(code.generator, *field) != k) throw std::logic_error("cyclic code: generator rows are dependent");
    code.labels.resize(p);
    for (unsigned i = 0; i < p; ++i) code.labels[i] = std::to_string(i);
    return code;
}

LinearCode extend_zero_sum(const LinearCode& code) {
    LinearCode out;
    out.field = code.field;
    out.n = code.n + 1;
    out.k = code.k;
    out.generator.reserve(code.k);
    for (const auto& row : code.generator) {
        unsigned sum = 0;
        for (unsigned c : row) sum = code.field->add(sum, c);
        std::vector<unsigned> extended;
        extended.reserve(out.n);
        extended.push_back(code.field->neg(sum));
        extended.insert(extended.end(), row.begin(), row.end());
        out.generator.push_back(std::move(extended));
    }
    if (row_reduce(out.generator, *out.field) != out.k)
        throw std::logic_error("extend_zero_sum: rank changed under extension");
    out.labels.reserve(out.n);
    out.labels.push_back("inf");
    out.labels.insert(out.labels.end(), code.labels.begin(), code.labels.end());
    return out;
}

LinearCode build_extended_qr_code(unsigned q, unsigned p) {
    FieldPtr field = Field::of_order(q);
    Poly g = qr_generator_polynomial(field, p);
    return extend_zero_sum(build_cyclic_code(g, p));
}

LinearCode dual_code(const LinearCode& code) {
    const Field& f = *code.field;
    // pivot/free column split of the RREF generator
    std::vector<int> pivot_row(code.n, -1);
    for (unsigned r = 0; r < code.k; ++r) {
        unsigned p = 0;
        while (p < code.n && code.generator[r][p] == 0) ++p;
        if (p == code.n) throw std::logic_error("dual_code: zero generator row");
        pivot_row[p] = static_cast<int>(r);
    }
    LinearCode dual;
    dual.field = code.field;
    dual.n = code.n;
    dual.k = code.n - code.k;
    dual.labels = code.labels;
    for (unsigned col = 0; col < code.n; ++col) {
        if (pivot_row[col] >= 0) continue;
        std::vector<unsigned> v(code.n, 0);
        v[col] = 1;
        for (unsigned pc = 0; pc < code.n; ++pc)
            if (pivot_row[pc] >= 0) v[pc] = f.neg(code.generator[static_cast<unsigned>(pivot_row[pc])][col]);
        dual.generator.push_back(std::move(v));
    }
    if (row_reduce(dual.generator, f) != dual.k) throw std::logic_error("dual_code: unexpected rank");
    return dual;
}

namespace {

std::uint64_t code_size(const LinearCode& code) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < code.k; ++i) {
        total *= code.field->order();
        if (total > kMaxCodewords)
            throw guard_error("codeword enumeration guard: q^k exceeds 2^24 for [" + std::to_string(code.n) +
                              "," + std::to_string(code.k) + "] over GF(" + std::to_string(code.field->order()) +
                              ")");
    }
    return total;
}

// Scaled generator rows: scaled[i][d] = d * row_i, indexed by field code d.
// Message digits are field codes run through an integer odometer; when a
// digit steps from code a to code b the codeword changes by (b - a) * row,
// so each changed position costs one precomputed vector addition.
struct ScaledRows {
    unsigned q = 0;
    std::vector<std::vector<std::vector<unsigned>>> scaled;  // [row][code][coordinate]
    std::vector<unsigned> step_delta;  // sub(d+1, d) for d < q-1, plus neg(q-1) at the wrap slot

    explicit ScaledRows(const LinearCode& code) : q(code.field->order()) {
        const Field& f = *code.field;
        scaled.resize(code.k);
        for (unsigned i = 0; i < code.k; ++i) {
            scaled[i].resize(q);
            for (unsigned d = 0; d < q; ++d) {
                scaled[i][d].resize(code.n);
                for (unsigned j = 0; j < code.n; ++j) scaled[i][d][j] = f.mul(d, code.generator[i][j]);
            }
        }
        step_delta.resize(q);
        for (unsigned d = 0; d + 1 < q; ++d) step_delta[d] = f.sub(d + 1, d);
        step_delta[q - 1] = f.neg(q - 1);  // wrap q-1 -> 0
    }
};

struct MessageCursor {
    const LinearCode* code;
    const ScaledRows* rows;
    std::vector<unsigned> digits;  // message digits, index 0 most significant
    std::vector<unsigned> word;    // current codeword

    void seed(std::uint64_t index) {
        const unsigned q = rows->q;
        digits.assign(code->k, 0);
        word.assign(code->n, 0);
        for (unsigned i = code->k; i-- > 0;) {
            digits[i] = static_cast<unsigned>(index % q);
            index /= q;
        }
        const Field& f = *code->field;
        for (unsigned i = 0; i < code->k; ++i) {
            if (digits[i] == 0) continue;
            const auto& scaled = rows->scaled[i][digits[i]];
            for (unsigned j = 0; j < code->n; ++j) word[j] = f.add(word[j], scaled[j]);
        }
    }

    void advance() {
        const unsigned q = rows->q;
        const Field& f = *code->field;
        unsigned pos = code->k;
        while (pos-- > 0) {
            const unsigned d = digits[pos];
            const auto& delta_row = rows->scaled[pos][rows->step_delta[d]];
            for (unsigned j = 0; j < code->n; ++j) word[j] = f.add(word[j], delta_row[j]);
            if (d != q - 1) {
                ++digits[pos];
                return;
            }
            digits[pos] = 0;
        }
    }

    std::uint32_t packed() const {
        std::uint32_t mask = 0;
        unsigned weight = 0;
        for (unsigned j = 0; j < code->n; ++j) {
            if (word[j] != 0) {
                mask |= (1u << j);
                ++weight;
            }
        }
        return CodewordTable::pack(mask, weight);
    }
};

}  // namespace

CodewordTable enumerate_codewords(const LinearCode& code) {
    if (code.n > kMaxPoints) throw guard_error("codeword enumeration guard: length exceeds mask width");
    const std::uint64_t total = code_size(code);
    CodewordTable table(code.n, static_cast<std::size_t>(total));
    auto* out = table.entries().data();
    const ScaledRows scaled(code);

    const std::int64_t chunk = 1 << 14;
    const std::int64_t chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::uint64_t lo = static_cast<std::uint64_t>(c) * chunk;
        const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
        MessageCursor cursor;
        cursor.code = &code;
        cursor.rows = &scaled;
        cursor.seed(lo);
        for (std::uint64_t i = lo; i < hi; ++i) {
            out[i] = cursor.packed();
            if (i + 1 < hi) cursor.advance();
        }
    }
    return table;
}

std::int64_t WeightDistribution::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::int64_t{0},
                           [](std::int64_t acc, const auto& kv) { return acc + kv.second; });
}

std::vector<unsigned> WeightDistribution::weight_set() const {
    std::vector<unsigned> out;
    out.reserve(counts.size());
    for (const auto& [w, c] : counts) out.push_back(w);
    return out;
}

std::int64_t WeightDistribution::at(unsigned w) const {
    auto it = counts.find(w);
    return it == counts.end() ? 0 : it->second;
}

std::string WeightDistribution::digest() const {
    // FNV-1a over the canonical "w:count;" rendering
    std::uint64_t h = 1469598103934665603ull;
    std::ostringstream text;
    for (const auto& [w, c] : counts) text << w << ":" << c << ";";
    for (char ch : text.str()) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

WeightDistribution weight_distribution(const CodewordTable& table) {
    std::vector<std::int64_t> counts(table.length() + 1, 0);
    for (std::size_t i = 0; i < table.size(); ++i) ++counts[table.weight(i)];
    WeightDistribution dist;
    for (unsigned w = 0; w <= table.length(); ++w)
        if (counts[w] != 0) dist.counts[w] = counts[w];
    return dist;
}

bool BlockMultiset::is_complete() const {
    if (blocks.empty()) return false;
    if (static_cast<std::int64_t>(blocks.size()) != binom(points, block_size)) return false;
    const std::int64_t mult = blocks.front().second;
    return std::all_of(blocks.begin(), blocks.end(), [&](const auto& b) { return b.second == mult; });
}

BlockMultiset shell_blocks(const CodewordTable& table, unsigned weight, bool distinct) {
    std::vector<std::uint32_t> masks;
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table.weight(i) == weight) masks.push_back(table.mask(i));
    if (masks.empty()) throw std::invalid_argument("shell_blocks: no codewords of weight " + std::to_string(weight));
    std::sort(masks.begin(), masks.end());

    BlockMultiset out;
    out.points = table.length();
    out.block_size = weight;
    for (std::size_t i = 0; i < masks.size();) {
        std::size_t j = i;
        while (j < masks.size() && masks[j] == masks[i]) ++j;
        out.blocks.emplace_back(masks[i], distinct ? 1 : static_cast<std::int64_t>(j - i));
        i = j;
    }
    out.block_count = 0;
    for (const auto& [mask, mult] : out.blocks) out.block_count += mult;
    return out;
}

}  // namespace qrd
