#include "lukatree/alphabet.hpp"

#include <charconv>
#include <limits>

#include "int128.hpp"
#include "lukatree/error.hpp"

namespace lukatree {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateLetter: return "DuplicateLetter";
    case ErrorCode::FirstDegreeNotMinusOne: return "FirstDegreeNotMinusOne";
    case ErrorCode::DegreesNotSorted: return "DegreesNotSorted";
    case ErrorCode::DegreeBelowMinusOne: return "DegreeBelowMinusOne";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotAValidWord: return "NotAValidWord";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::TupleNotValid: return "TupleNotValid";
    case ErrorCode::DomainTooSmall: return "DomainTooSmall";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::InfeasibleParity: return "InfeasibleParity";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BitsExhausted: return "BitsExhausted";
  }
  return "Unknown";
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename Int>
Int parse_integer(std::string_view text, std::string_view what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    fail(ErrorCode::ParseError,
         "cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

TreeAlphabet::TreeAlphabet(std::vector<char> letters, std::vector<int> degrees)
    : letters_(std::move(letters)), degrees_(std::move(degrees)) {
  lookup_.fill(-1);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    lookup_[static_cast<unsigned char>(letters_[i])] = static_cast<std::int32_t>(i);
  }
}

TreeAlphabet TreeAlphabet::make(std::vector<char> letters, std::vector<int> degrees) {
  if (letters.empty()) fail(ErrorCode::InvalidArgument, "alphabet must have at least one letter");
  if (letters.size() != degrees.size()) {
    fail(ErrorCode::InvalidArgument, "letter and degree lists differ in length");
  }
  if (letters.size() > std::numeric_limits<std::int32_t>::max()) {
    fail(ErrorCode::InvalidArgument, "alphabet too large");
  }
  std::array<bool, 256> seen{};
  for (char c : letters) {
    auto& slot = seen[static_cast<unsigned char>(c)];
    if (slot) fail(ErrorCode::DuplicateLetter, std::string("duplicate letter '") + c + "'");
    slot = true;
  }
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < -1) {
      fail(ErrorCode::DegreeBelowMinusOne,
           std::string("degree of '") + letters[i] + "' is below -1");
    }
  }
  if (degrees.front() != -1) {
    fail(ErrorCode::FirstDegreeNotMinusOne, "the first letter must have degree -1");
  }
  for (std::size_t i = 1; i < degrees.size(); ++i) {
    if (degrees[i - 1] > degrees[i]) {
      fail(ErrorCode::DegreesNotSorted, "degrees must be non-decreasing");
    }
  }
  return TreeAlphabet(std::move(letters), std::move(degrees));
}

TreeAlphabet TreeAlphabet::parse(std::string_view text) {
  std::vector<char> letters;
  std::vector<int> degrees;
  for (auto item : split(text, ',')) {
    auto colon = item.find(':');
    if (colon != 1) {
      fail(ErrorCode::ParseError,
           "expected 'letter:degree', got '" + std::string(item) + "'");
    }
    char symbol = item[0];
    if (symbol <= ' ' || symbol == ',' || symbol == ':' || symbol == '(' || symbol == ')' ||
        static_cast<unsigned char>(symbol) >= 0x7f) {
      fail(ErrorCode::ParseError, "letters must be printable characters other than ,:()");
    }
    letters.push_back(symbol);
    degrees.push_back(parse_integer<int>(item.substr(2), "degree"));
  }
  return make(std::move(letters), std::move(degrees));
}

TreeAlphabet TreeAlphabet::motzkin() { return make({'a', 'b', 'c'}, {-1, 0, 1}); }

TreeAlphabet TreeAlphabet::binary() { return make({'a', 'c'}, {-1, 1}); }

std::optional<Letter> TreeAlphabet::find(char symbol) const noexcept {
  auto index = lookup_[static_cast<unsigned char>(symbol)];
  if (index < 0) return std::nullopt;
  return static_cast<Letter>(index);
}

std::string TreeAlphabet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += letters_[i];
    out += ':';
    out += std::to_string(degrees_[i]);
  }
  return out;
}

DegreeTuple::DegreeTuple(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) fail(ErrorCode::InvalidArgument, "tuple must have at least one count");
  for (auto c : counts_) {
    if (total_ > std::numeric_limits<std::uint64_t>::max() - c) {
      fail(ErrorCode::InvalidArgument, "tuple total overflows");
    }
    total_ += c;
  }
  if (total_ == 0) fail(ErrorCode::InvalidArgument, "tuple total must be at least 1");
}

DegreeTuple DegreeTuple::parse(std::string_view text) {
  std::vector<std::uint64_t> counts;
  for (auto item : split(text, ',')) counts.push_back(parse_integer<std::uint64_t>(item, "count"));
  return DegreeTuple(std::move(counts));
}

std::string DegreeTuple::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts_[i]);
  }
  return out;
}

bool is_f_valid(const DegreeTuple& tuple, const TreeAlphabet& alphabet) {
  if (tuple.size() != alphabet.size()) {
    fail(ErrorCode::ArityMismatch, "tuple has " + std::to_string(tuple.size()) +
                                       " counts but the alphabet has " +
                                       std::to_string(alphabet.size()) + " letters");
  }
  detail::int128 sum = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    sum += static_cast<detail::int128>(tuple[i]) * alphabet.degree(static_cast<Letter>(i));
  }
  return sum == -1;
}

void require_f_valid(const DegreeTuple& tuple, const TreeAlphabet& alphabet) {
  if (!is_f_valid(tuple, alphabet)) {
    fail(ErrorCode::TupleNotValid,
         "tuple " + tuple.to_string() + " is not f-valid for " + alphabet.to_string());
  }
}

}  // namespace lukatree
