#include "ubp/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "ubp/error.hpp"

namespace ubp {

  ////////////////////////////////////////////////////////////////////////
  // Printing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string block_text(Block const& b) {
      std::string s = "{";
      for (std::size_t i = 0; i < b.size(); ++i) {
        s += (i ? "," : "") + std::to_string(b[i]);
      }
      return s + "}";
    }

    template <class Combination, class TermPrinter>
    std::string sum_text(Combination const& x, TermPrinter&& print_key) {
      if (x.is_zero()) {
        return "0";
      }
      std::string s;
      for (auto const& [key, coeff] : x) {
        if (!s.empty()) {
          s += " + ";
        }
        s += coeff.get_str() + "*" + print_key(key);
      }
      return s;
    }
  }  // namespace

  std::string to_text(SetPartition const& a) {
    if (a.block_count() == 0) {
      return "{}";
    }
    std::string s;
    for (auto const& b : a.blocks()) {
      s += block_text(b);
    }
    return s;
  }

  std::string to_text(Permutation const& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.images().size(); ++i) {
      s += (i ? "," : "") + std::to_string(p.images()[i]);
    }
    return s + "]";
  }

  std::string to_text(Ubp const& f) {
    if (f.size() == 0) {
      return "{}->{}";
    }
    std::string s;
    for (std::size_t k = 0; k < f.domain().block_count(); ++k) {
      if (k) {
        s += ";";
      }
      s += block_text(f.domain().block(k)) + "->" + block_text(f.image(k));
    }
    return s;
  }

  std::string to_text(Element const& x) {
    return sum_text(x, [](Ubp const& f) { return to_text(f); });
  }

  std::string to_text(TensorElement const& t) {
    return sum_text(t, [](auto const& pair) {
      return to_text(pair.first) + " | " + to_text(pair.second);
    });
  }

  std::string to_text(NCSymElement const& u) {
    return sum_text(u, [](SetPartition const& a) { return "p" + to_text(a); });
  }

  std::string to_text(NCSymTensor const& t) {
    return sum_text(t, [](auto const& pair) {
      return "p" + to_text(pair.first) + " | p" + to_text(pair.second);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class Cursor {
     public:
      explicit Cursor(std::string_view text) : text_(text) {}

      std::size_t pos() const noexcept {
        return pos_;
      }

      bool at_end() const noexcept {
        return pos_ >= text_.size();
      }

      char peek() const noexcept {
        return at_end() ? '\0' : text_[pos_];
      }

      bool peek_is(std::string_view token) const {
        return text_.substr(pos_, token.size()) == token;
      }

      void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      bool accept(std::string_view token) {
        if (peek_is(token)) {
          pos_ += token.size();
          return true;
        }
        return false;
      }

      void expect(std::string_view token) {
        if (!accept(token)) {
          fail("expected '" + std::string(token) + "'");
        }
      }

      std::string read_integer() {
        std::size_t const start = pos_;
        if (peek() == '-' || peek() == '+') {
          ++pos_;
        }
        std::size_t const digits = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
        if (pos_ == digits) {
          pos_ = start;
          fail("expected an integer");
        }
        return std::string(text_.substr(start, pos_ - start));
      }

      int read_small() {
        auto const        start = pos_;
        std::string const s     = read_integer();
        if (s.size() > 9) {
          pos_ = start;
          fail("integer too large");
        }
        return std::stoi(s);
      }

      void expect_end() {
        skip_ws();
        if (!at_end()) {
          fail("unexpected trailing input");
        }
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what, pos_);
      }

      std::string_view slice(std::size_t from) const {
        return text_.substr(from, pos_ - from);
      }

     private:
      std::string_view text_;
      std::size_t      pos_ = 0;
    };

    Block read_block(Cursor& in) {
      in.expect("{");
      Block b;
      if (in.peek() == '}') {
        in.fail("empty block");
      }
      b.push_back(in.read_small());
      while (in.accept(",")) {
        b.push_back(in.read_small());
      }
      in.expect("}");
      return b;
    }

    int total_size(std::vector<Block> const& blocks) {
      std::size_t n = 0;
      for (auto const& b : blocks) {
        n += b.size();
      }
      return static_cast<int>(n);
    }

    SetPartition read_partition(Cursor& in) {
      auto const start = in.pos();
      if (in.accept("{}")) {
        return SetPartition();
      }
      std::vector<Block> blocks;
      while (in.peek() == '{') {
        blocks.push_back(read_block(in));
      }
      if (blocks.empty()) {
        in.fail("expected a set partition");
      }
      SetPartition a;
      try {
        a = SetPartition(total_size(blocks), blocks);
      } catch (ValidationError const& e) {
        throw ParseError(std::string("invalid set partition: ") + e.what(), start);
      }
      auto const canonical = to_text(a);
      if (in.slice(start) != canonical) {
        throw ParseError("set partition is not in canonical order; normalized form is "
                             + canonical,
                         start);
      }
      return a;
    }

    Ubp read_ubp(Cursor& in) {
      auto const start = in.pos();
      if (in.accept("{}->{}")) {
        return Ubp();
      }
      std::vector<Block> lhs, rhs;
      do {
        lhs.push_back(read_block(in));
        in.expect("->");
        rhs.push_back(read_block(in));
      } while (in.accept(";"));

      Ubp f;
      try {
        int const    n = total_size(lhs);
        SetPartition domain(n, lhs);
        SetPartition codomain(n, rhs);
        std::vector<std::size_t> map(domain.block_count());
        for (std::size_t t = 0; t < lhs.size(); ++t) {
          auto const& a = lhs[t];
          auto        b = rhs[t];
          auto const  k = domain.block_index_of(a.front());
          auto const  j = codomain.block_index_of(b.front());
          std::sort(b.begin(), b.end());
          if (codomain.block(j) != b) {
            throw ValidationError("right-hand blocks do not form a partition");
          }
          map[k] = j;
        }
        f = Ubp(std::move(domain), std::move(codomain), std::move(map));
      } catch (ValidationError const& e) {
        throw ParseError(std::string("invalid uniform block permutation: ") + e.what(), start);
      }
      auto const canonical = to_text(f);
      if (in.slice(start) != canonical) {
        throw ParseError("block arrows are not in canonical order; normalized form is "
                             + canonical,
                         start);
      }
      return f;
    }

    Permutation read_permutation(Cursor& in) {
      auto const start = in.pos();
      in.expect("[");
      std::vector<int> images;
      if (!in.accept("]")) {
        images.push_back(in.read_small());
        while (in.accept(",")) {
          images.push_back(in.read_small());
        }
        in.expect("]");
      }
      try {
        return Permutation(std::move(images));
      } catch (ValidationError const& e) {
        throw ParseError(std::string("invalid permutation: ") + e.what(), start);
      }
    }

    Integer read_coefficient(Cursor& in) {
      auto const s = in.read_integer();
      in.skip_ws();
      in.expect("*");
      in.skip_ws();
      return Integer(s[0] == '+' ? s.substr(1) : s);
    }

    // Parses "0" or "term + term + ..." with a caller-supplied term reader.
    template <class Combination, class ReadTerm>
    Combination read_sum(std::string_view text, ReadTerm&& read_term) {
      Cursor      in(text);
      Combination result;
      auto const  first = text.find_first_not_of(" \t\n");
      auto const  last  = text.find_last_not_of(" \t\n");
      if (first != std::string_view::npos && text.substr(first, last - first + 1) == "0") {
        return result;
      }
      while (true) {
        in.skip_ws();
        auto const coeff = read_coefficient(in);
        read_term(in, result, coeff);
        in.skip_ws();
        if (in.at_end()) {
          break;
        }
        in.expect("+");
      }
      return result;
    }
  }  // namespace

  SetPartition parse_set_partition(std::string_view text) {
    Cursor in(text);
    auto   a = read_partition(in);
    in.expect_end();
    return a;
  }

  Permutation parse_permutation(std::string_view text) {
    Cursor in(text);
    auto   p = read_permutation(in);
    in.expect_end();
    return p;
  }

  Ubp parse_ubp(std::string_view text) {
    Cursor in(text);
    auto   f = read_ubp(in);
    in.expect_end();
    return f;
  }

  Element parse_element(std::string_view text) {
    return read_sum<Element>(text, [](Cursor& in, Element& out, Integer const& c) {
      out.add(read_ubp(in), c);
    });
  }

  TensorElement parse_tensor(std::string_view text) {
    return read_sum<TensorElement>(text, [](Cursor& in, TensorElement& out, Integer const& c) {
      auto left = read_ubp(in);
      in.skip_ws();
      in.expect("|");
      in.skip_ws();
      out.add({std::move(left), read_ubp(in)}, c);
    });
  }

  NCSymElement parse_ncsym(std::string_view text) {
    return read_sum<NCSymElement>(text, [](Cursor& in, NCSymElement& out, Integer const& c) {
      in.expect("p");
      out.add(read_partition(in), c);
    });
  }

  NCSymTensor parse_ncsym_tensor(std::string_view text) {
    return read_sum<NCSymTensor>(text, [](Cursor& in, NCSymTensor& out, Integer const& c) {
      in.expect("p");
      auto left = read_partition(in);
      in.skip_ws();
      in.expect("|");
      in.skip_ws();
      in.expect("p");
      out.add({std::move(left), read_partition(in)}, c);
    });
  }

}  // namespace ubp
