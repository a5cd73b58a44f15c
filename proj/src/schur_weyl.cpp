#include "ubp/schur_weyl.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <optional>
#include <unordered_map>

#include "ubp/error.hpp"
#include "ubp/exact_rank.hpp"

namespace ubp {

  ////////////////////////////////////////////////////////////////////////
  // CycScalar
  ////////////////////////////////////////////////////////////////////////

  CycScalar::CycScalar(int order) {
    if (order < 1) {
      throw ValidationError("cyclotomic order must be positive");
    }
    coeffs_.assign(static_cast<std::size_t>(order), 0);
  }

  CycScalar CycScalar::monomial(int order, long exponent, Integer coeff) {
    CycScalar x(order);
    long      e = exponent % order;
    if (e < 0) {
      e += order;
    }
    x.coeffs_[static_cast<std::size_t>(e)] = std::move(coeff);
    return x;
  }

  bool CycScalar::is_zero() const {
    for (auto const& c : coeffs_) {
      if (c != 0) {
        return false;
      }
    }
    return true;
  }

  CycScalar& CycScalar::operator+=(CycScalar const& other) {
    if (other.order() != order()) {
      throw ValidationError("adding cyclotomic scalars of different orders");
    }
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      coeffs_[j] += other.coeffs_[j];
    }
    return *this;
  }

  CycScalar operator*(CycScalar const& lhs, CycScalar const& rhs) {
    if (lhs.order() != rhs.order()) {
      throw ValidationError("multiplying cyclotomic scalars of different orders");
    }
    auto const r = lhs.coeffs_.size();
    CycScalar  result(lhs.order());
    for (std::size_t i = 0; i < r; ++i) {
      if (lhs.coeffs_[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < r; ++j) {
        if (rhs.coeffs_[j] != 0) {
          result.coeffs_[(i + j) % r] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
      }
    }
    return result;
  }

  std::string to_string(CycScalar const& x) {
    std::string s;
    for (std::size_t j = 0; j < x.coefficients().size(); ++j) {
      auto const& c = x.coefficients()[j];
      if (c == 0) {
        continue;
      }
      if (!s.empty()) {
        s += " + ";
      }
      s += c.get_str();
      if (j > 0) {
        s += "*z^" + std::to_string(j);
      }
    }
    return s.empty() ? "0" : s;
  }

  ////////////////////////////////////////////////////////////////////////
  // ActionMatrix
  ////////////////////////////////////////////////////////////////////////

  ActionMatrix::ActionMatrix(std::size_t dim, int order) : order_(order), rows_(dim) {
    if (order < 1) {
      throw ValidationError("cyclotomic order must be positive");
    }
  }

  ActionMatrix ActionMatrix::identity(std::size_t dim, int order) {
    ActionMatrix id(dim, order);
    for (std::size_t i = 0; i < dim; ++i) {
      id.add(i, i, CycScalar::monomial(order, 0));
    }
    return id;
  }

  void ActionMatrix::add(std::size_t row, std::size_t col, CycScalar const& value) {
    if (row >= dim() || col >= dim()) {
      throw ValidationError("matrix index out of range");
    }
    auto& r          = rows_[row];
    auto [it, fresh] = r.try_emplace(col, value);
    if (!fresh) {
      it->second += value;
    }
    if (it->second.is_zero()) {
      r.erase(it);
    }
  }

  CycScalar ActionMatrix::entry(std::size_t row, std::size_t col) const {
    auto it = rows_.at(row).find(col);
    return it == rows_[row].end() ? CycScalar(order_) : it->second;
  }

  std::size_t ActionMatrix::nonzeros() const {
    std::size_t count = 0;
    for (auto const& r : rows_) {
      count += r.size();
    }
    return count;
  }

  ActionMatrix ActionMatrix::lifted(int r) const {
    if (order_ != 1) {
      throw ValidationError("only integer matrices can be lifted");
    }
    ActionMatrix result(dim(), r);
    for (std::size_t i = 0; i < dim(); ++i) {
      for (auto const& [j, x] : rows_[i]) {
        result.add(i, j, CycScalar::monomial(r, 0, x.coefficients()[0]));
      }
    }
    return result;
  }

  ActionMatrix operator*(ActionMatrix const& a, ActionMatrix const& b) {
    if (a.dim() != b.dim() || a.order() != b.order()) {
      throw ValidationError("multiplying incompatible action matrices");
    }
    ActionMatrix result(a.dim(), a.order());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (auto const& [k, x] : a.rows_[i]) {
        for (auto const& [j, y] : b.rows_[k]) {
          result.add(i, j, x * y);
        }
      }
    }
    return result;
  }

  ActionMatrix operator+(ActionMatrix const& a, ActionMatrix const& b) {
    if (a.dim() != b.dim() || a.order() != b.order()) {
      throw ValidationError("adding incompatible action matrices");
    }
    ActionMatrix result = a;
    for (std::size_t i = 0; i < b.dim(); ++i) {
      for (auto const& [j, y] : b.rows_[i]) {
        result.add(i, j, y);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  std::size_t word_index(std::vector<int> const& letters, int m) {
    std::size_t index = 0;
    for (int x : letters) {
      index = index * static_cast<std::size_t>(m) + static_cast<std::size_t>(x - 1);
    }
    return index;
  }

  std::vector<int> word_at(std::size_t index, int m, int n) {
    std::vector<int> letters(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
      letters[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::size_t>(m)) + 1;
      index /= static_cast<std::size_t>(m);
    }
    return letters;
  }

  std::size_t checked_power(int m, int n, std::size_t ceiling) {
    if (m < 1 || n < 0) {
      throw ValidationError("need m >= 1 and n >= 0");
    }
    std::size_t result = 1;
    for (int k = 0; k < n; ++k) {
      result *= static_cast<std::size_t>(m);
      if (result > ceiling) {
        throw CeilingError(std::to_string(m) + "^" + std::to_string(n)
                           + " exceeds the action ceiling " + std::to_string(ceiling));
      }
    }
    return result;
  }

  std::optional<std::vector<int>> act_on_word(std::vector<int> const& letters, Ubp const& f) {
    if (static_cast<int>(letters.size()) != f.size()) {
      throw ValidationError("word length does not match the degree");
    }
    std::vector<int> result(letters.size());
    for (std::size_t k = 0; k < f.domain().block_count(); ++k) {
      auto const& image  = f.image(k);
      int const   letter = letters[static_cast<std::size_t>(image.front() - 1)];
      for (int y : image) {
        if (letters[static_cast<std::size_t>(y - 1)] != letter) {
          return std::nullopt;
        }
      }
      for (int x : f.domain().block(k)) {
        result[static_cast<std::size_t>(x - 1)] = letter;
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Action matrices
  ////////////////////////////////////////////////////////////////////////

  ActionMatrix ubp_action_matrix(Ubp const& f, int m, std::size_t ceiling) {
    auto const   dim = checked_power(m, f.size(), ceiling);
    ActionMatrix result(dim, 1);
    auto const   one = CycScalar::monomial(1, 0);
    for (std::size_t w = 0; w < dim; ++w) {
      if (auto target = act_on_word(word_at(w, m, f.size()), f)) {
        result.add(w, word_index(*target, m), one);
      }
    }
    return result;
  }

  ActionMatrix ubp_action_matrix_via_generators(Ubp const& f, int m, std::size_t ceiling) {
    int const n   = f.size();
    auto const dim = checked_power(m, n, ceiling);
    std::vector<Ubp> generators;
    for (int i = 1; i < n; ++i) {
      generators.push_back(generator_s(n, i));
      generators.push_back(generator_b(n, i));
    }
    // parent[y] = (generator index, x) with y = generators[index] . x.
    std::unordered_map<Ubp, std::pair<std::size_t, Ubp>> parent;
    auto const                                            id = identity(n);
    std::deque<Ubp>                                       queue{id};
    parent.emplace(id, std::make_pair(generators.size(), id));
    while (!queue.empty() && !parent.contains(f)) {
      auto x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < generators.size(); ++k) {
        auto y = compose(generators[k], x);
        if (parent.emplace(y, std::make_pair(k, x)).second) {
          queue.push_back(std::move(y));
        }
      }
    }
    auto         result  = ActionMatrix::identity(dim, 1);
    auto         current = f;
    // f = g_1 . g_2 . ... . g_k . id, so M(f) = M(g_1) ... M(g_k).
    std::vector<std::size_t> word;
    while (current != id) {
      auto const& [k, x] = parent.at(current);
      word.push_back(k);
      current = x;
    }
    for (auto k : word) {
      result = result * ubp_action_matrix(generators[k], m, ceiling);
    }
    return result;
  }

  ActionMatrix group_action_matrix(GroupElement const& g, int m, int r, int n, std::size_t ceiling) {
    if (static_cast<int>(g.torus.size()) != m || g.perm.size() != m) {
      throw ValidationError("group element does not match m = " + std::to_string(m));
    }
    auto const   dim = checked_power(m, n, ceiling);
    ActionMatrix result(dim, r);
    for (std::size_t w = 0; w < dim; ++w) {
      auto letters  = word_at(w, m, n);
      long exponent = 0;
      for (int& x : letters) {
        exponent += g.torus[static_cast<std::size_t>(x - 1)];
        x = g.perm(x);
      }
      result.add(w, word_index(letters, m), CycScalar::monomial(r, exponent));
    }
    return result;
  }

  namespace {

    // A matrix with at most one non-zero entry per row, each entry c zeta^e
    // with c a machine integer. col[i] is -1 for a zero row.
    struct MonomialRows {
      std::vector<long> col;
      std::vector<long> exponent;
      std::vector<long> coeff;
    };

    std::optional<MonomialRows> monomial_rows(ActionMatrix const& a) {
      MonomialRows out;
      auto const   dim = a.dim();
      out.col.assign(dim, -1);
      out.exponent.assign(dim, 0);
      out.coeff.assign(dim, 0);
      for (std::size_t i = 0; i < dim; ++i) {
        auto const& row = a.rows()[i];
        if (row.empty()) {
          continue;
        }
        if (row.size() > 1) {
          return std::nullopt;
        }
        auto const& [j, x] = *row.begin();
        int found = 0;
        for (std::size_t e = 0; e < x.coefficients().size(); ++e) {
          auto const& c = x.coefficients()[e];
          if (c == 0) {
            continue;
          }
          if (++found > 1 || !c.fits_slong_p()) {
            return std::nullopt;
          }
          out.exponent[i] = static_cast<long>(e);
          out.coeff[i]    = c.get_si();
        }
        out.col[i] = static_cast<long>(j);
      }
      return out;
    }

    // Row i of a * b as (column, exponent, coefficient); nullopt on overflow.
    struct Entry {
      long col, exponent, coeff;
      bool operator==(Entry const&) const = default;
    };

    std::optional<Entry> product_row(MonomialRows const& a, MonomialRows const& b, std::size_t i, long r) {
      auto const k = a.col[i];
      if (k < 0 || b.col[static_cast<std::size_t>(k)] < 0) {
        return Entry{-1, 0, 0};
      }
      auto const kk = static_cast<std::size_t>(k);
      long       c  = 0;
      if (__builtin_mul_overflow(a.coeff[i], b.coeff[kk], &c)) {
        return std::nullopt;
      }
      return Entry{b.col[kk], (a.exponent[i] + b.exponent[kk]) % r, c};
    }

    // A matrix together with its monomial form when it has one.
    struct Prepared {
      ActionMatrix                matrix;
      std::optional<MonomialRows> rows;

      explicit Prepared(ActionMatrix m) : matrix(std::move(m)), rows(monomial_rows(matrix)) {}
    };

    bool commute(Prepared const& a, Prepared const& b) {
      if (a.rows && b.rows) {
        bool exact = true;
        for (std::size_t i = 0; i < a.matrix.dim() && exact; ++i) {
          auto const ab = product_row(*a.rows, *b.rows, i, a.matrix.order());
          auto const ba = product_row(*b.rows, *a.rows, i, a.matrix.order());
          if (!ab || !ba) {
            exact = false;
          } else if (*ab != *ba) {
            return false;
          }
        }
        if (exact) {
          return true;
        }
      }
      return a.matrix * b.matrix == b.matrix * a.matrix;
    }

  }  // namespace

  std::vector<CommutationResult> commutation_report(int n, int m, int r, std::size_t ceiling) {
    std::vector<std::pair<std::string, Ubp>> monoid_gens{{"id", identity(n)}};
    for (int i = 1; i < n; ++i) {
      monoid_gens.emplace_back("s" + std::to_string(i), generator_s(n, i));
      monoid_gens.emplace_back("b" + std::to_string(i), generator_b(n, i));
    }
    std::vector<std::pair<std::string, GroupElement>> group_gens;
    for (int j = 1; j <= m; ++j) {
      std::vector<long> torus(static_cast<std::size_t>(m), 0);
      torus[static_cast<std::size_t>(j - 1)] = 1;
      group_gens.emplace_back("t" + std::to_string(j), GroupElement{torus, Permutation::identity(m)});
    }
    for (int j = 1; j < m; ++j) {
      std::vector<int> images(static_cast<std::size_t>(m));
      for (int x = 1; x <= m; ++x) {
        images[static_cast<std::size_t>(x - 1)] = x;
      }
      std::swap(images[static_cast<std::size_t>(j - 1)], images[static_cast<std::size_t>(j)]);
      group_gens.emplace_back("(" + std::to_string(j) + " " + std::to_string(j + 1) + ")",
                              GroupElement{std::vector<long>(static_cast<std::size_t>(m), 0),
                                           Permutation(std::move(images))});
    }
    std::vector<Prepared> group_mats;
    for (auto const& [name, g] : group_gens) {
      group_mats.emplace_back(group_action_matrix(g, m, r, n, ceiling));
    }
    std::vector<CommutationResult> report;
    for (auto const& [fname, f] : monoid_gens) {
      Prepared const mf(ubp_action_matrix(f, m, ceiling).lifted(r));
      for (std::size_t k = 0; k < group_gens.size(); ++k) {
        auto const& mg = group_mats[k];
        report.push_back({fname, group_gens[k].first, commute(mg, mf)});
      }
    }
    return report;
  }

  bool commutation_check(int n, int m, int r, std::size_t ceiling) {
    for (auto const& entry : commutation_report(n, m, r, ceiling)) {
      if (!entry.commutes) {
        return false;
      }
    }
    return true;
  }

  std::size_t action_span_rank(int n, int m, std::size_t ceiling) {
    auto const dim = checked_power(m, n, ceiling);
    // Each matrix is a 0/1 vector; its support is the set of flattened
    // positions of its entries. Over Q the rank of the vectors equals the
    // rank of their Gram matrix, whose entries are support intersections.
    std::vector<std::vector<std::size_t>> supports;
    for (auto const& f : enumerate_ubp(n)) {
      auto const                mat = ubp_action_matrix(f, m, ceiling);
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < dim; ++i) {
        for (auto const& [j, x] : mat.rows()[i]) {
          support.push_back(i * dim + j);
        }
      }
      std::sort(support.begin(), support.end());
      supports.push_back(std::move(support));
    }
    std::vector<std::vector<Integer>> gram(supports.size(), std::vector<Integer>(supports.size()));
    for (std::size_t a = 0; a < supports.size(); ++a) {
      for (std::size_t b = a; b < supports.size(); ++b) {
        std::size_t common = 0;
        auto        i      = supports[a].begin();
        auto        j      = supports[b].begin();
        while (i != supports[a].end() && j != supports[b].end()) {
          if (*i < *j) {
            ++i;
          } else if (*j < *i) {
            ++j;
          } else {
            ++common, ++i, ++j;
          }
        }
        gram[a][b] = gram[b][a] = static_cast<unsigned long>(common);
      }
    }
    return integer_rank(std::move(gram));
  }

  ActionMatrix convolution_action(Ubp const& f, Ubp const& g, int m, std::size_t ceiling) {
    int const    p   = f.size();
    int const    q   = g.size();
    int const    n   = p + q;
    auto const   dim = checked_power(m, n, ceiling);
    ActionMatrix result(dim, 1);
    auto const   one = CycScalar::monomial(1, 0);
    for (std::size_t w = 0; w < dim; ++w) {
      auto const letters = word_at(w, m, n);
      // Unshuffle coproduct: every split of the positions into (S, T).
      for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        if (std::popcount(mask) != p) {
          continue;
        }
        std::vector<int> left, right;
        for (int k = 0; k < n; ++k) {
          ((mask >> k) & 1 ? left : right).push_back(letters[static_cast<std::size_t>(k)]);
        }
        auto a = act_on_word(left, f);
        auto b = act_on_word(right, g);
        if (a && b) {
          a->insert(a->end(), b->begin(), b->end());
          result.add(w, word_index(*a, m), one);
        }
      }
    }
    return result;
  }

  ActionMatrix element_action_matrix(Element const& x, int m, int n, std::size_t ceiling) {
    ActionMatrix result(checked_power(m, n, ceiling), 1);
    for (auto const& [f, coeff] : x) {
      if (f.size() != n) {
        throw ValidationError("element_action_matrix: term of degree " + std::to_string(f.size()));
      }
      auto const mat = ubp_action_matrix(f, m, ceiling);
      for (std::size_t i = 0; i < mat.dim(); ++i) {
        for (auto const& [j, y] : mat.rows()[i]) {
          result.add(i, j, CycScalar::monomial(1, 0, coeff * y.coefficients()[0]));
        }
      }
    }
    return result;
  }

}  // namespace ubp
