/*
 * Copyright (c) 2026, The BitSim Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bitsim/encoder.hpp"
#include "bitsim/error.hpp"

namespace bitsim {

namespace {

void write(const BitCode& code, std::string& out) {
  if (code.is_compound()) {
    out += code.kind == BitCode::Kind::Join ? "(U:" : "(I:";
    for (std::size_t i = 0; i < code.operands.size(); ++i) {
      if (i > 0) out += '|';
      write(code.operands[i], out);
    }
    out += ')';
    return;
  }
  for (auto it = code.bits.rbegin(); it != code.bits.rend(); ++it) out += to_char(*it);
  for (const auto& s : code.segments) {
    out += '[';
    out += to_char(s.quantifier);
    out += '|';
    out += serialize(s.role);
    out += '|';
    write(s.filler, out);
    out += ']';
  }
}

class CodeReader {
 public:
  explicit CodeReader(std::string_view text) : text_(text) {}

  BitCode read_all() {
    BitCode c = code();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("malformed code at byte " + std::to_string(pos_) + ": " + message, 1,
                     static_cast<int>(pos_) + 1);
  }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void expect(char c) {
    if (!at(c)) {
      fail(pos_ < text_.size() ? std::string("expected '") + c + "'"
                               : std::string("expected '") + c + "', found end of input");
    }
    ++pos_;
  }

  BitCode code() {
    if (++depth_ > 512) fail("nesting too deep");
    BitCode c = at('(') ? compound() : plain();
    --depth_;
    return c;
  }

  BitCode compound() {
    expect('(');
    BitCode c;
    if (at('U')) {
      c.kind = BitCode::Kind::Join;
    } else if (at('I')) {
      c.kind = BitCode::Kind::Meet;
    } else {
      fail("expected 'U' or 'I'");
    }
    ++pos_;
    expect(':');
    c.operands.push_back(code());
    while (at('|')) {
      ++pos_;
      const std::size_t start = pos_;
      c.operands.push_back(code());
      if (c.operands.back().width() != c.operands.front().width()) {
        pos_ = start;
        fail("compound operands differ in width");
      }
    }
    if (c.operands.size() < 2) fail("compound needs at least two operands");
    expect(')');
    if (pos_ < text_.size() && text_[pos_] != '|' && text_[pos_] != ')' && text_[pos_] != ']') {
      fail("a compound must span the whole code");
    }
    return c;
  }

  BitCode plain() {
    BitCode c;
    while (pos_ < text_.size()) {
      auto b = bit_from_char(text_[pos_]);
      if (!b) break;
      c.bits.push_back(*b);
      ++pos_;
    }
    if (c.bits.empty()) {
      fail(pos_ < text_.size() ? "expected a bit character" : "empty code");
    }
    if (at('(')) fail("a compound must span the whole code");
    std::reverse(c.bits.begin(), c.bits.end());
    while (at('[')) {
      ++pos_;
      Segment s;
      auto q = pos_ < text_.size() ? quantifier_from_char(text_[pos_]) : std::nullopt;
      if (!q) fail("expected quantifier 'A', 'E', 'X' or 'y'");
      s.quantifier = *q;
      ++pos_;
      expect('|');
      while (pos_ < text_.size() && !at('|')) {
        auto r = role_bit_from_char(text_[pos_]);
        if (!r) fail("expected a role bit");
        s.role.push_back(*r);
        ++pos_;
      }
      std::reverse(s.role.begin(), s.role.end());
      expect('|');
      const std::size_t start = pos_;
      s.filler = code();
      if (s.filler.width() != static_cast<int>(c.bits.size())) {
        pos_ = start;
        fail("segment filler width differs from the code width");
      }
      expect(']');
      c.segments.push_back(std::move(s));
    }
    if (at('(')) fail("a compound must span the whole code");
    return c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

void check_widths(const BitCode& code, const EncodingContext& ctx) {
  if (code.width() != ctx.concept_width()) {
    throw ContextMismatch("code width " + std::to_string(code.width()) +
                          " differs from context width " + std::to_string(ctx.concept_width()));
  }
  for (const auto& o : code.operands) check_widths(o, ctx);
  for (const auto& s : code.segments) {
    if (static_cast<int>(s.role.size()) != ctx.role_width()) {
      throw ContextMismatch("role code width " + std::to_string(s.role.size()) +
                            " differs from context role width " +
                            std::to_string(ctx.role_width()));
    }
    check_widths(s.filler, ctx);
  }
}

}  // namespace

std::string serialize(const BitCode& code) {
  std::string out;
  write(code, out);
  return out;
}

std::string serialize(const std::vector<RoleBit>& role) {
  std::string out;
  for (auto it = role.rbegin(); it != role.rend(); ++it) out += to_char(*it);
  return out;
}

BitCode deserialize(std::string_view text) { return CodeReader(text).read_all(); }

BitCode deserialize(std::string_view text, const EncodingContext& ctx) {
  BitCode c = deserialize(text);
  check_widths(c, ctx);
  return c;
}

}  // namespace bitsim
