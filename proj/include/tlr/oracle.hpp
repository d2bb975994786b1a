#pragma once

#include <cstdint>
#include <vector>

#include "tlr/list_tuple.hpp"

namespace tlr {

/// Oracle access to a tuple of candidate sets, one coordinate per query.
/// Every query counts, including repeats (no caching at this layer). The
/// counter belongs to the root oracle; slices forward to it, so a root
/// oracle instance must stay on one thread at a time.
class ListOracle {
  public:
    virtual ~ListOracle() = default;
    virtual const std::vector<fe_t>& query(std::size_t i) = 0;
    virtual std::size_t length() const = 0;
    virtual std::uint64_t queries_made() const = 0;
};

class TupleOracle final : public ListOracle {
  public:
    explicit TupleOracle(const ListTuple& tuple) : tuple_(&tuple) {}

    const std::vector<fe_t>& query(std::size_t i) override {
        if (i >= tuple_->n) throw ValidationError("oracle query out of range");
        ++count_;
        return tuple_->sets[i];
    }
    std::size_t length() const override { return tuple_->n; }
    std::uint64_t queries_made() const override { return count_; }

    void reset_counter() { count_ = 0; }

  private:
    const ListTuple* tuple_;
    std::uint64_t count_ = 0;
};

/// View of one row of an [n] x [row_len] layout: row r covers flat
/// coordinates r*row_len .. r*row_len + row_len - 1.
class RowSlice final : public ListOracle {
  public:
    RowSlice(ListOracle& parent, std::size_t row, std::size_t row_len)
        : parent_(&parent), row_(row), row_len_(row_len) {
        if ((row + 1) * row_len > parent.length()) throw ValidationError("row slice out of range");
    }
    const std::vector<fe_t>& query(std::size_t j) override {
        if (j >= row_len_) throw ValidationError("row slice query out of range");
        return parent_->query(row_ * row_len_ + j);
    }
    std::size_t length() const override { return row_len_; }
    std::uint64_t queries_made() const override { return parent_->queries_made(); }

  private:
    ListOracle* parent_;
    std::size_t row_, row_len_;
};

/// View of one column: position i covers flat coordinate i*row_len + col.
class ColSlice final : public ListOracle {
  public:
    ColSlice(ListOracle& parent, std::size_t col, std::size_t row_len)
        : parent_(&parent), col_(col), row_len_(row_len), rows_(parent.length() / row_len) {
        if (col >= row_len) throw ValidationError("column slice out of range");
    }
    const std::vector<fe_t>& query(std::size_t i) override {
        if (i >= rows_) throw ValidationError("column slice query out of range");
        return parent_->query(i * row_len_ + col_);
    }
    std::size_t length() const override { return rows_; }
    std::uint64_t queries_made() const override { return parent_->queries_made(); }

  private:
    ListOracle* parent_;
    std::size_t col_, row_len_, rows_;
};

/// Symbol-level oracle over a plain word (used by the locally decodable
/// pre-codes, whose channel is a corrupted string rather than a tuple).
class SymbolOracle {
  public:
    virtual ~SymbolOracle() = default;
    virtual fe_t query(std::size_t i) = 0;
    virtual std::size_t length() const = 0;
    virtual std::uint64_t queries_made() const = 0;
};

class WordOracle final : public SymbolOracle {
  public:
    explicit WordOracle(const std::vector<fe_t>& word) : word_(&word) {}
    fe_t query(std::size_t i) override {
        if (i >= word_->size()) throw ValidationError("oracle query out of range");
        ++count_;
        return (*word_)[i];
    }
    std::size_t length() const override { return word_->size(); }
    std::uint64_t queries_made() const override { return count_; }

  private:
    const std::vector<fe_t>* word_;
    std::uint64_t count_ = 0;
};

}  // namespace tlr
