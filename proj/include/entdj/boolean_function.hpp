#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "entdj/errors.hpp"

namespace entdj {

enum class PromiseClass { Constant, Balanced, Neither };

inline const char* to_string(PromiseClass cls) {
    switch (cls) {
    case PromiseClass::Constant: return "Constant";
    case PromiseClass::Balanced: return "Balanced";
    default: return "Neither";
    }
}

// f : {0,1}^n -> {0,1} stored as an explicit truth table. table()[x] = f(x)
// with x read as an unsigned integer whose most significant bit is input
// bit 0.
class BooleanFunction {
  public:
    static constexpr int kMaxArity = 24;

    BooleanFunction(int arity, std::vector<std::uint8_t> table)
        : arity_(arity), table_(std::move(table)) {
        if (arity_ < 1 || arity_ > kMaxArity) {
            throw std::invalid_argument("BooleanFunction: arity must be in [1, 24]");
        }
        if (table_.size() != (std::uint64_t{1} << arity_)) {
            throw std::invalid_argument("BooleanFunction: table length must be 2^arity");
        }
        for (std::uint8_t v : table_) {
            if (v > 1) {
                throw std::invalid_argument("BooleanFunction: table entries must be 0 or 1");
            }
        }
    }

    // Parses tables written as {0,1}-strings, e.g. "0110" for arity 2. The
    // length must be a power of two no smaller than 2.
    static BooleanFunction from_table_string(std::string_view text) {
        const auto len = text.size();
        if (len < 2 || (len & (len - 1)) != 0) {
            throw std::invalid_argument(
                "BooleanFunction: table string length must be a power of two >= 2");
        }
        int arity = 0;
        while ((std::size_t{1} << arity) < len) {
            ++arity;
        }
        std::vector<std::uint8_t> table(len);
        for (std::size_t x = 0; x < len; ++x) {
            const char c = text[x];
            if (c != '0' && c != '1') {
                throw std::invalid_argument("BooleanFunction: table string may contain only 0 and 1");
            }
            table[x] = static_cast<std::uint8_t>(c - '0');
        }
        return BooleanFunction(arity, std::move(table));
    }

    static BooleanFunction constant(int arity, int value) {
        if (value != 0 && value != 1) {
            throw std::invalid_argument("BooleanFunction: constant value must be 0 or 1");
        }
        if (arity < 1 || arity > kMaxArity) {
            throw std::invalid_argument("BooleanFunction: arity must be in [1, 24]");
        }
        return BooleanFunction(
            arity, std::vector<std::uint8_t>(std::uint64_t{1} << arity,
                                             static_cast<std::uint8_t>(value)));
    }

    int arity() const { return arity_; }
    std::uint64_t domain_size() const { return std::uint64_t{1} << arity_; }
    std::uint8_t operator()(std::uint64_t x) const { return table_[x]; }
    const std::vector<std::uint8_t>& table() const { return table_; }

    std::string table_string() const {
        std::string out(table_.size(), '0');
        for (std::size_t x = 0; x < table_.size(); ++x) {
            out[x] = static_cast<char>('0' + table_[x]);
        }
        return out;
    }

    bool operator==(const BooleanFunction& other) const = default;

  private:
    int arity_;
    std::vector<std::uint8_t> table_;
};

inline PromiseClass classify(const BooleanFunction& f) {
    std::uint64_t ones = 0;
    for (std::uint8_t v : f.table()) {
        ones += v;
    }
    if (ones == 0 || ones == f.domain_size()) {
        return PromiseClass::Constant;
    }
    if (2 * ones == f.domain_size()) {
        return PromiseClass::Balanced;
    }
    return PromiseClass::Neither;
}

// Complete, duplicate-free enumeration of one promise class. Balanced
// enumeration is capped at arity 4 (C(16,8) = 12870 functions already).
inline std::vector<BooleanFunction> enumerate_promise_functions(int arity, PromiseClass cls) {
    if (arity < 1) {
        throw std::invalid_argument("enumerate_promise_functions: arity must be >= 1");
    }
    std::vector<BooleanFunction> out;
    if (cls == PromiseClass::Constant) {
        if (arity > BooleanFunction::kMaxArity) {
            throw std::invalid_argument("enumerate_promise_functions: arity must be <= 24");
        }
        out.push_back(BooleanFunction::constant(arity, 0));
        out.push_back(BooleanFunction::constant(arity, 1));
        return out;
    }
    if (cls != PromiseClass::Balanced) {
        throw std::invalid_argument("enumerate_promise_functions: class must be Constant or Balanced");
    }
    if (arity > 4) {
        throw std::invalid_argument(
            "enumerate_promise_functions: balanced enumeration is limited to arity <= 4");
    }
    const std::uint32_t bits = std::uint32_t{1} << arity;
    // Gosper's hack over all bit patterns with exactly bits/2 ones.
    std::uint32_t mask = (std::uint32_t{1} << (bits / 2)) - 1;
    const std::uint32_t limit = (std::uint32_t{1} << bits) - 1;
    while (true) {
        std::vector<std::uint8_t> table(bits);
        for (std::uint32_t x = 0; x < bits; ++x) {
            table[x] = static_cast<std::uint8_t>((mask >> x) & 1u);
        }
        out.emplace_back(arity, std::move(table));
        if (mask == (limit ^ (limit >> (bits / 2)))) {
            break;
        }
        const std::uint32_t c = mask & (0u - mask);
        const std::uint32_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
        if (mask > limit) {
            break;
        }
    }
    return out;
}

// Ordered list of arity-1 functions declared to share one promise class.
// Validated on construction; the algorithms consume it without re-checking.
class FunctionFamily {
  public:
    explicit FunctionFamily(std::vector<BooleanFunction> functions)
        : functions_(std::move(functions)) {
        if (functions_.empty()) {
            throw std::invalid_argument("FunctionFamily: at least one function is required");
        }
        for (const auto& f : functions_) {
            if (f.arity() != 1) {
                throw std::invalid_argument("FunctionFamily: every function must have arity 1");
            }
        }
        promise_ = classify(functions_.front());
        for (std::size_t i = 0; i < functions_.size(); ++i) {
            const PromiseClass cls = classify(functions_[i]);
            if (cls == PromiseClass::Neither) {
                throw PromiseViolation("FunctionFamily: function " + std::to_string(i) +
                                       " is neither constant nor balanced");
            }
            if (cls != promise_) {
                throw PromiseViolation("FunctionFamily: mixed promise classes");
            }
        }
    }

    const std::vector<BooleanFunction>& functions() const { return functions_; }
    const BooleanFunction& operator[](std::size_t i) const { return functions_[i]; }
    int size() const { return static_cast<int>(functions_.size()); }
    PromiseClass promise() const { return promise_; }

  private:
    std::vector<BooleanFunction> functions_;
    PromiseClass promise_;
};

} // namespace entdj
