// Copyright 2026 The mmcodes Authors
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

#include "mmcodes/ring.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "mmcodes/errors.h"

namespace mmcodes {

GroupSpec::GroupSpec(std::vector<uint32_t> orders, size_t max_size) : orders_(std::move(orders)) {
    if (orders_.empty()) {
        throw std::invalid_argument("group spec needs at least one cyclic factor");
    }
    size_t n = 1;
    for (uint32_t l : orders_) {
        if (l == 0) {
            throw std::invalid_argument("cyclic factor orders must be at least 1");
        }
        n *= l;
        if (n > max_size) {
            throw std::invalid_argument("group spec " + str() + " exceeds the size budget of " +
                                        std::to_string(max_size) + " elements");
        }
    }
    size_ = n;
}

uint32_t GroupSpec::encode(std::span<const uint32_t> exponents) const {
    uint32_t index = 0;
    for (size_t k = 0; k < orders_.size(); k++) {
        index = index * orders_[k] + exponents[k] % orders_[k];
    }
    return index;
}

void GroupSpec::decode(uint32_t index, std::span<uint32_t> exponents) const {
    for (size_t k = orders_.size(); k-- > 0;) {
        exponents[k] = index % orders_[k];
        index /= orders_[k];
    }
}

std::vector<uint32_t> GroupSpec::decode(uint32_t index) const {
    std::vector<uint32_t> out(orders_.size());
    decode(index, out);
    return out;
}

std::string GroupSpec::str() const {
    std::string out = "[";
    for (size_t i = 0; i < orders_.size(); i++) {
        if (i) {
            out += ",";
        }
        out += std::to_string(orders_[i]);
    }
    return out + "]";
}

VariableNames VariableNames::defaults(size_t num_vars) {
    static const std::vector<std::vector<std::string>> kLetters = {
        {}, {"x"}, {"x", "y"}, {"x", "y", "z"}, {"w", "x", "y", "z"}};
    if (num_vars < kLetters.size()) {
        return VariableNames(kLetters[num_vars]);
    }
    VariableNames names;
    names.indexed_only_ = true;
    for (size_t i = 0; i < num_vars; i++) {
        names.names_.push_back("x" + std::to_string(i + 1));
    }
    return names;
}

VariableNames::VariableNames(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); i++) {
        const std::string &n = names_[i];
        if (n.size() != 1 || !std::isalpha(static_cast<unsigned char>(n[0]))) {
            throw std::invalid_argument("variable name '" + n + "' must be a single letter");
        }
        for (size_t j = 0; j < i; j++) {
            if (names_[j] == n) {
                throw std::invalid_argument("duplicate variable name '" + n + "'");
            }
        }
    }
}

std::optional<size_t> VariableNames::lookup(char letter) const {
    if (indexed_only_) {
        return std::nullopt;
    }
    for (size_t i = 0; i < names_.size(); i++) {
        if (names_[i][0] == letter) {
            return i;
        }
    }
    return std::nullopt;
}

std::string VariableNames::name(size_t var) const {
    if (var < names_.size()) {
        return names_[var];
    }
    return "x" + std::to_string(var + 1);
}

RingElem RingElem::one(const GroupSpec &spec) {
    RingElem e(spec);
    e.monomials_.push_back(0);
    return e;
}

RingElem RingElem::variable(const GroupSpec &spec, size_t var, uint64_t power) {
    if (var >= spec.num_vars()) {
        throw std::invalid_argument("variable index out of range");
    }
    std::vector<uint32_t> exps(spec.num_vars(), 0);
    exps[var] = static_cast<uint32_t>(power % spec.order(var));
    RingElem e(spec);
    e.monomials_.push_back(spec.encode(exps));
    return e;
}

RingElem RingElem::monomial(const GroupSpec &spec, std::span<const uint64_t> exponents) {
    if (exponents.size() != spec.num_vars()) {
        throw DimensionError("exponent vector has wrong length");
    }
    std::vector<uint32_t> exps(spec.num_vars());
    for (size_t k = 0; k < exps.size(); k++) {
        exps[k] = static_cast<uint32_t>(exponents[k] % spec.order(k));
    }
    RingElem e(spec);
    e.monomials_.push_back(spec.encode(exps));
    return e;
}

RingElem RingElem::from_indices(const GroupSpec &spec, std::vector<uint32_t> indices) {
    std::sort(indices.begin(), indices.end());
    RingElem e(spec);
    for (size_t i = 0; i < indices.size();) {
        size_t j = i;
        while (j < indices.size() && indices[j] == indices[i]) {
            j++;
        }
        if (indices[i] >= spec.size()) {
            throw std::invalid_argument("monomial index out of range");
        }
        if ((j - i) % 2 == 1) {
            e.monomials_.push_back(indices[i]);
        }
        i = j;
    }
    return e;
}

std::vector<std::vector<uint32_t>> RingElem::exponent_vectors() const {
    std::vector<std::vector<uint32_t>> out;
    out.reserve(monomials_.size());
    for (uint32_t m : monomials_) {
        out.push_back(spec_.decode(m));
    }
    return out;
}

namespace {

void require_same_spec(const RingElem &a, const RingElem &b) {
    if (!(a.spec() == b.spec())) {
        throw std::invalid_argument("ring elements over different group specs " + a.spec().str() + " and " +
                                    b.spec().str());
    }
}

}  // namespace

RingElem ring_add(const RingElem &a, const RingElem &b) {
    require_same_spec(a, b);
    std::vector<uint32_t> out;
    std::set_symmetric_difference(a.monomials().begin(), a.monomials().end(), b.monomials().begin(),
                                  b.monomials().end(), std::back_inserter(out));
    return RingElem::from_indices(a.spec(), std::move(out));
}

RingElem ring_mul(const RingElem &a, const RingElem &b) {
    require_same_spec(a, b);
    const GroupSpec &spec = a.spec();
    size_t d = spec.num_vars();
    std::vector<uint8_t> parity(spec.size(), 0);
    std::vector<uint32_t> ea(d), eb(d), sum(d);
    for (uint32_t ma : a.monomials()) {
        spec.decode(ma, ea);
        for (uint32_t mb : b.monomials()) {
            spec.decode(mb, eb);
            for (size_t k = 0; k < d; k++) {
                sum[k] = (ea[k] + eb[k]) % spec.order(k);
            }
            parity[spec.encode(sum)] ^= 1;
        }
    }
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < parity.size(); i++) {
        if (parity[i]) {
            out.push_back(i);
        }
    }
    return RingElem::from_indices(spec, std::move(out));
}

size_t weight(const RingElem &a) {
    return a.weight();
}

namespace {

class PolyParser {
  public:
    PolyParser(std::string_view text, const GroupSpec &spec, const VariableNames &names)
        : text_(text), spec_(spec), names_(names) {}

    RingElem parse() {
        skip_space();
        if (pos_ == text_.size()) {
            throw ParseError("empty polynomial", pos_);
        }
        RingElem result = expr();
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        }
        return result;
    }

  private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }

    bool starts_factor() {
        skip_space();
        if (pos_ == text_.size()) {
            return false;
        }
        char c = text_[pos_];
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
    }

    RingElem expr() {
        RingElem acc = term();
        while (true) {
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '+') {
                pos_++;
                acc = ring_add(acc, term());
            } else {
                return acc;
            }
        }
    }

    RingElem term() {
        RingElem acc = factor();
        while (true) {
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                pos_++;
                acc = ring_mul(acc, factor());
            } else if (starts_factor()) {
                acc = ring_mul(acc, factor());
            } else {
                return acc;
            }
        }
    }

    uint64_t read_uint() {
        size_t start = pos_;
        uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (value > (UINT64_MAX - 9) / 10) {
                throw ParseError("integer too large", start);
            }
            value = value * 10 + static_cast<uint64_t>(text_[pos_] - '0');
            pos_++;
        }
        if (pos_ == start) {
            throw ParseError("expected an unsigned integer", start);
        }
        return value;
    }

    RingElem factor() {
        skip_space();
        if (pos_ == text_.size()) {
            throw ParseError("unexpected end of input", pos_);
        }
        size_t start = pos_;
        char c = text_[pos_];
        if (c == '(') {
            pos_++;
            RingElem inner = expr();
            skip_space();
            if (pos_ == text_.size() || text_[pos_] != ')') {
                throw ParseError("expected ')'", pos_);
            }
            pos_++;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            uint64_t value = read_uint();
            if (value == 0) {
                return RingElem(spec_);
            }
            if (value == 1) {
                return RingElem::one(spec_);
            }
            throw ParseError("coefficient " + std::to_string(value) + " is not allowed over F2", start);
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) {
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        pos_++;
        size_t var;
        if (c == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            uint64_t index = read_uint();
            if (index == 0 || index > spec_.num_vars()) {
                throw ParseError("variable x" + std::to_string(index) + " is outside x1..x" +
                                     std::to_string(spec_.num_vars()),
                                 start);
            }
            var = static_cast<size_t>(index - 1);
        } else {
            auto found = names_.lookup(c);
            if (!found) {
                throw ParseError(std::string("unknown variable '") + c + "'", start);
            }
            var = *found;
            if (var >= spec_.num_vars()) {
                throw ParseError(std::string("variable '") + c + "' has index " + std::to_string(var + 1) +
                                     " but the ring has " + std::to_string(spec_.num_vars()) + " variables",
                                 start);
            }
        }
        uint64_t power = 1;
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            pos_++;
            skip_space();
            power = read_uint();
        }
        return RingElem::variable(spec_, var, power);
    }

    std::string_view text_;
    const GroupSpec &spec_;
    const VariableNames &names_;
    size_t pos_ = 0;
};

}  // namespace

RingElem parse_poly(std::string_view text, const GroupSpec &spec, const VariableNames &names) {
    return PolyParser(text, spec, names).parse();
}

RingElem parse_poly(std::string_view text, const GroupSpec &spec) {
    return parse_poly(text, spec, VariableNames::defaults(spec.num_vars()));
}

std::string render(const RingElem &a, const VariableNames &names) {
    if (a.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto &exps : a.exponent_vectors()) {
        if (!out.empty()) {
            out += " + ";
        }
        std::string mono;
        for (size_t k = 0; k < exps.size(); k++) {
            if (exps[k] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += names.name(k);
            if (exps[k] > 1) {
                mono += "^" + std::to_string(exps[k]);
            }
        }
        out += mono.empty() ? "1" : mono;
    }
    return out;
}

std::string render(const RingElem &a) {
    return render(a, VariableNames::defaults(a.spec().num_vars()));
}

}  // namespace mmcodes
