#include "supermonad/weights.hpp"

#include "supermonad/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace supermonad {

namespace {

std::string render(const std::vector<std::int64_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

} // namespace

Weight::Weight(std::vector<std::int64_t> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] < parts_[i])
            throw ValidationError("weight " + render(parts_) + " is not weakly decreasing", "weight");
}

std::int64_t Weight::total() const
{
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

Weight Weight::padded(std::size_t m) const
{
    if (m < parts_.size())
        throw ValidationError("cannot pad " + render(parts_) + " down to " + std::to_string(m) + " parts", "weight");
    if (!is_partition())
        throw ValidationError("padding " + render(parts_) + " with zeros breaks monotonicity", "weight");
    auto p = parts_;
    p.resize(m, 0);
    return Weight(std::move(p));
}

Weight Weight::shifted(std::int64_t c) const
{
    auto p = parts_;
    for (auto& x : p)
        x += c;
    return Weight(std::move(p));
}

RootSequence::RootSequence(std::vector<std::int64_t> roots) : roots_(std::move(roots))
{
    for (std::size_t i = 1; i < roots_.size(); ++i)
        if (roots_[i - 1] <= roots_[i])
            throw ValidationError("root sequence " + render(roots_) + " is not strictly decreasing", "roots");
}

bool RootSequence::precedes_or_equal(const RootSequence& other) const
{
    if (size() != other.size())
        return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (roots_[i] > other.roots_[i])
            return false;
    return true;
}

DegreeSequence::DegreeSequence(std::vector<std::int64_t> degrees) : degrees_(std::move(degrees))
{
    for (std::size_t i = 1; i < degrees_.size(); ++i)
        if (degrees_[i - 1] >= degrees_[i])
            throw ValidationError("degree sequence " + render(degrees_) + " is not strictly increasing", "degrees");
}

Integer dim_schur(const Weight& alpha, std::size_t m)
{
    if (m == 0)
        throw ValidationError("dim_schur needs a positive rank", "m");
    if (alpha.size() != m)
        throw ValidationError("weight has " + std::to_string(alpha.size()) + " parts, expected " + std::to_string(m),
                              "weight");
    Integer num = 1, den = 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            num *= Integer(static_cast<long>(alpha[i] - alpha[j] + static_cast<std::int64_t>(j - i)));
            den *= Integer(static_cast<unsigned long>(j - i));
        }
    return num / den;
}

Weight dual_weight(const Weight& alpha)
{
    std::vector<std::int64_t> p(alpha.parts().rbegin(), alpha.parts().rend());
    for (auto& x : p)
        x = -x;
    return Weight(std::move(p));
}

std::pair<Weight, std::int64_t> normalize_twist(const Weight& alpha, std::int64_t d)
{
    if (alpha.empty())
        return {alpha, d};
    const std::int64_t c = alpha.last();
    return {alpha.shifted(-c), d - c};
}

namespace {

// DFS over the rows of nu/lambda. Row r receives counts[k] copies of letter
// k+1, laid out in increasing order; letters in row r are at most r+1.
class LrSearch {
public:
    LrSearch(std::vector<std::int64_t> lambda, std::vector<std::int64_t> mu, std::size_t rows)
        : lambda_(std::move(lambda)), mu_(std::move(mu)), rows_(rows)
    {
        lambda_.resize(rows_, 0);
        used_.assign(mu_.size(), 0);
        read_.assign(mu_.size(), 0);
        nu_ = lambda_;
        letters_.assign(rows_, {});
    }

    std::map<std::vector<std::int64_t>, Integer> run()
    {
        row(0);
        return found_;
    }

private:
    void row(std::size_t r)
    {
        if (r == rows_) {
            if (used_ == mu_)
                found_[nu_] += 1;
            return;
        }
        std::vector<std::int64_t> counts(mu_.size(), 0);
        const std::int64_t room = r == 0 ? std::numeric_limits<std::int64_t>::max() / 4 : nu_[r - 1] - lambda_[r];
        letter(r, std::min<std::size_t>(r + 1, mu_.size()), 0, counts, room);
    }

    // Choose counts for letters [k, top) of row r. Letters are read right to
    // left, so the largest letter is decided first.
    void letter(std::size_t r, std::size_t top, std::size_t depth, std::vector<std::int64_t>& counts,
                std::int64_t room)
    {
        if (depth == top) {
            place_row(r, counts);
            return;
        }
        const std::size_t k = top - 1 - depth;
        std::int64_t cap = std::min(mu_[k] - used_[k], room);
        if (k > 0)
            cap = std::min(cap, read_[k - 1] - read_[k]);
        for (std::int64_t c = 0; c <= cap; ++c) {
            counts[k] = c;
            letter(r, top, depth + 1, counts, room - c);
        }
        counts[k] = 0;
    }

    void place_row(std::size_t r, const std::vector<std::int64_t>& counts)
    {
        std::vector<std::int64_t> row_letters;
        for (std::size_t k = 0; k < counts.size(); ++k)
            row_letters.insert(row_letters.end(), static_cast<std::size_t>(counts[k]), static_cast<std::int64_t>(k + 1));
        if (r > 0) {
            const auto& above = letters_[r - 1];
            for (std::size_t t = 0; t < row_letters.size(); ++t) {
                const std::int64_t col = lambda_[r] + static_cast<std::int64_t>(t);
                const std::int64_t off = col - lambda_[r - 1];
                if (off >= 0 && above[static_cast<std::size_t>(off)] >= row_letters[t])
                    return;
            }
        }
        for (std::size_t k = 0; k < counts.size(); ++k) {
            used_[k] += counts[k];
            read_[k] += counts[k];
        }
        nu_[r] = lambda_[r] + static_cast<std::int64_t>(row_letters.size());
        letters_[r] = std::move(row_letters);
        row(r + 1);
        for (std::size_t k = 0; k < counts.size(); ++k) {
            used_[k] -= counts[k];
            read_[k] -= counts[k];
        }
        nu_[r] = lambda_[r];
        letters_[r].clear();
    }

    std::vector<std::int64_t> lambda_, mu_;
    std::size_t rows_;
    std::vector<std::int64_t> used_, read_, nu_;
    std::vector<std::vector<std::int64_t>> letters_;
    std::map<std::vector<std::int64_t>, Integer> found_;
};

std::vector<std::int64_t> trimmed(const Weight& w)
{
    auto p = w.parts();
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    return p;
}

} // namespace

WeightMultiset littlewood_richardson(const Weight& alpha, const Weight& beta, std::size_t m)
{
    if (m == 0 || alpha.size() != m || beta.size() != m)
        throw ValidationError("littlewood_richardson: both weights need exactly m = " + std::to_string(m) + " parts",
                              "weight");
    const auto [lam, ca] = normalize_twist(alpha, 0);
    const auto [mu, cb] = normalize_twist(beta, 0);
    // normalize_twist returns d - c, so the common shift is -(ca + cb).
    const std::int64_t shift = -(ca + cb);

    LrSearch search(trimmed(lam), trimmed(mu), m);
    WeightMultiset out;
    for (auto& [nu, c] : search.run())
        out[Weight(nu).shifted(shift)] += c;
    return out;
}

WeightMultiset branch_restrict(const Weight& alpha, std::size_t n, std::size_t m)
{
    if (alpha.size() != n)
        throw ValidationError("branch_restrict: weight must have n = " + std::to_string(n) + " parts", "weight");
    if (m < 1 || m > n)
        throw ValidationError("branch_restrict: need 1 <= m <= n", "m");

    WeightMultiset current{{alpha, Integer(1)}};
    for (std::size_t k = n; k > m; --k) {
        WeightMultiset next;
        for (const auto& [a, mult] : current) {
            // beta_i in [a_{i+1}, a_i], i = 0..k-2
            std::vector<std::int64_t> beta(k - 1);
            auto rec = [&](auto&& self, std::size_t i) -> void {
                if (i + 1 == k) {
                    next[Weight(beta)] += mult;
                    return;
                }
                for (std::int64_t b = a[i + 1]; b <= a[i]; ++b) {
                    beta[i] = b;
                    self(self, i + 1);
                }
            };
            rec(rec, 0);
        }
        current = std::move(next);
    }
    return current;
}

} // namespace supermonad
