#include "unsharp/report.hpp"

#include <algorithm>

namespace unsharp {

std::size_t check_report::declare(std::string_view law) {
  auto it = std::find_if(verdicts_.begin(), verdicts_.end(),
                         [&](const verdict& v) { return v.law == law; });
  if (it != verdicts_.end()) return static_cast<std::size_t>(it - verdicts_.begin());
  verdicts_.push_back(verdict{std::string(law), true, 0, {}, {}});
  return verdicts_.size() - 1;
}

void check_report::fail(std::size_t slot, witness w) {
  verdict& v = verdicts_[slot];
  v.pass = false;
  ++v.failures;
  if (v.witnesses.empty() || all_witnesses_) v.witnesses.push_back(std::move(w));
}

void check_report::fail(std::size_t slot, std::string note) {
  verdict& v = verdicts_[slot];
  v.pass = false;
  ++v.failures;
  if (v.note.empty()) v.note = std::move(note);
}

void check_report::merge(const check_report& other, std::string_view prefix) {
  for (const verdict& v : other.verdicts_) {
    verdict copy = v;
    copy.law = std::string(prefix) + v.law;
    verdicts_.push_back(std::move(copy));
  }
}

bool check_report::passed() const {
  return std::all_of(verdicts_.begin(), verdicts_.end(), [](const verdict& v) { return v.pass; });
}

const verdict* check_report::find(std::string_view law) const {
  for (const verdict& v : verdicts_) {
    if (v.law == law) return &v;
  }
  return nullptr;
}

bool check_report::passed(std::string_view law) const {
  const verdict* v = find(law);
  return v != nullptr && v->pass;
}

std::string render_witness(const witness& w, const std::vector<std::string>& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ", ";
    out += w[i] < labels.size() ? labels[w[i]] : "#" + std::to_string(w[i]);
  }
  return out + ")";
}

}  // namespace unsharp
