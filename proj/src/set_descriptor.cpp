// Copyright 2026 The fracdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fracdim/set_descriptor.hpp"

#include <charconv>

#include "fracdim/errors.hpp"

namespace fracdim {

SetDescriptor::SetDescriptor(Family family, unsigned m, Rational alpha)
    : family_(family), m_(m), alpha_(std::move(alpha)) {
  if (m_ < 1) throw DomainError("set length m must be at least 1");
  if (alpha_.sign() <= 0) throw DomainError("alpha must be positive");
  if (family_ != Family::kSumset && alpha_ != 1) {
    throw DomainError("alpha is only supported for sumset families");
  }
}

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr FamilyName kNames[] = {
    {Family::kContinuedFraction, "cf"}, {Family::kEgyGreedy, "egy"},
    {Family::kEgyLeq, "egy-leq"},       {Family::kEngel, "engel"},
    {Family::kEngelLeq, "engel-leq"},   {Family::kSumset, "sumset"},
};

unsigned parse_m(std::string_view text, std::string_view spec) {
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw DomainError("malformed set length in '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

SetDescriptor SetDescriptor::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("set spec '" + std::string(spec) + "' lacks ':M'");
  }
  const std::string_view head = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);
  std::string_view alpha_text;
  if (const auto second = rest.find(':'); second != std::string_view::npos) {
    alpha_text = rest.substr(second + 1);
    rest = rest.substr(0, second);
    constexpr std::string_view kPrefix = "alpha=";
    if (alpha_text.substr(0, kPrefix.size()) != kPrefix) {
      throw DomainError("expected alpha=P/Q in '" + std::string(spec) + "'");
    }
    alpha_text.remove_prefix(kPrefix.size());
  }
  for (const auto& [family, name] : kNames) {
    if (name != head) continue;
    if (!alpha_text.empty() && family != Family::kSumset) {
      throw DomainError("alpha is only supported for sumset families");
    }
    Rational alpha = alpha_text.empty() ? Rational(1) : Rational::parse(alpha_text);
    return SetDescriptor(family, parse_m(rest, spec), std::move(alpha));
  }
  throw DomainError("unknown set family '" + std::string(head) + "'");
}

Interval SetDescriptor::default_domain() const {
  if (family_ == Family::kSumset) return Interval::closed(0, m_);
  return Interval::closed(0, 1);
}

std::string_view SetDescriptor::name() const {
  for (const auto& [family, name] : kNames) {
    if (family == family_) return name;
  }
  return "?";
}

std::string SetDescriptor::to_string() const {
  std::string out = std::string(name()) + ":" + std::to_string(m_);
  if (family_ == Family::kSumset && alpha_ != 1) {
    out += ":alpha=" + alpha_.to_string();
  }
  return out;
}

}  // namespace fracdim
