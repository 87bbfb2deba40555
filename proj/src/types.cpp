#include "polycells/types.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "polycells/facecount.hpp"

namespace polycells {

TypeSignature::TypeSignature(std::map<int, int> multiplicities) : mult_(std::move(multiplicities)) {
  for (auto it = mult_.begin(); it != mult_.end();) {
    if (it->first < 3) throw std::invalid_argument("cells have at least three sides");
    if (it->second < 0) throw std::invalid_argument("negative cell multiplicity");
    if (it->second == 0)
      it = mult_.erase(it);
    else
      ++it;
  }
}

TypeSignature TypeSignature::from_partition(const std::vector<int>& parts) {
  std::map<int, int> m;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
    ++m[p + 2];
  }
  return TypeSignature(std::move(m));
}

TypeSignature TypeSignature::parse(const std::string& text) {
  static const std::regex outer(R"(\s*<(.*)>\s*)");
  static const std::regex term(R"(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?)");
  std::smatch whole;
  if (!std::regex_match(text, whole, outer) || whole[1].str().find_first_not_of(" \t") == std::string::npos)
    throw std::invalid_argument("signature must look like <3^2:4>");
  std::map<int, int> m;
  const std::string body = whole[1].str();
  std::size_t pos = 0;
  while (true) {
    const std::size_t colon = body.find(':', pos);
    const std::string item = body.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos);
    std::smatch t;
    if (!std::regex_match(item, t, term) || item.size() > 24)
      throw std::invalid_argument("malformed signature term '" + item + "'");
    const int count = t[2].matched ? std::stoi(t[2].str()) : 1;
    if (count < 1) throw std::invalid_argument("malformed signature term '" + item + "'");
    m[std::stoi(t[1].str())] += count;
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  return TypeSignature(std::move(m));
}

int TypeSignature::cell_count() const {
  int c = 0;
  for (const auto& [size, count] : mult_) c += count;
  return c;
}

int TypeSignature::host_n() const {
  int n = 1;
  for (const auto& [size, count] : mult_) n += (size - 2) * count;
  return n;
}

std::vector<int> TypeSignature::factorization() const {
  std::vector<int> f;
  for (auto it = mult_.rbegin(); it != mult_.rend(); ++it)
    for (int j = 0; j < it->second; ++j) f.push_back(it->first - 1);
  return f;
}

std::string TypeSignature::factorization_string() const {
  std::string s;
  for (int j : factorization()) {
    if (!s.empty()) s += " x ";
    s += "K" + std::to_string(j);
  }
  return s;
}

std::string TypeSignature::to_string() const {
  std::string s = "<";
  bool first = true;
  for (const auto& [size, count] : mult_) {
    if (!first) s += ":";
    first = false;
    s += std::to_string(size);
    if (count != 1) s += "^" + std::to_string(count);
  }
  return s + ">";
}

Integer partition_count(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("partition_count needs n >= 1 and k >= 1");
  // table[j][m] = p_j(m), filled row by row through the recurrence.
  std::vector<std::vector<Integer>> table(k + 1, std::vector<Integer>(n + 1, 0));
  for (int j = 1; j <= k; ++j) {
    for (int m = 1; m <= n; ++m) {
      if (j == 1)
        table[j][m] = 1;
      else if (j > m)
        table[j][m] = 0;
      else
        table[j][m] = table[j - 1][m - 1] + (m - j >= 1 ? table[j][m - j] : Integer(0));
    }
  }
  return table[k][n];
}

namespace {

void extend(int remaining, int parts_left, int max_part, std::vector<int>& prefix,
            std::vector<std::vector<int>>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  // Remaining parts each need at least 1 and at most max_part.
  const int hi = std::min(max_part, remaining - (parts_left - 1));
  for (int p = hi; p >= 1; --p) {
    if (p * parts_left < remaining) break;
    prefix.push_back(p);
    extend(remaining - p, parts_left - 1, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions_into_parts(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("partitions need n >= 1 and k >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  extend(n, k, n, prefix, out);
  return out;
}

std::vector<TypeSignature> type_signatures(int n, int k) {
  FaceQuery{n, k}.validate();
  std::vector<TypeSignature> out;
  for (const auto& parts : partitions_into_parts(n - 1, k + 1))
    out.push_back(TypeSignature::from_partition(parts));
  return out;
}

Integer type_face_count(const TypeSignature& sig) {
  if (sig.empty()) throw std::invalid_argument("type_face_count needs a nonempty signature");
  const int k = sig.codim();
  const int n = sig.host_n();
  Integer multinomial = factorial(sig.cell_count());
  for (const auto& [size, count] : sig.multiplicities()) multinomial /= factorial(count);
  Integer num = binomial(n + k, k) * multinomial;
  if (num % (k + 1) != 0) throw std::logic_error("type face count is not integral");
  return num / (k + 1);
}

}  // namespace polycells
