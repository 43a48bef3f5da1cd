#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace supent::harness {

enum class CheckStatus { Pass, Fail, Discrepancy };
std::string_view to_string(CheckStatus s) noexcept;

/// One reproduced quantity. Discrepancy rows compare against a reference value
/// known not to follow from the stated formula; `note` explains the mismatch.
struct ExampleCheck {
  std::string example;
  std::string quantity;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::Fail;
  std::string note;
};

/// Examples 1-4, including the large-d family at d = 2^16 + 1.
std::vector<ExampleCheck> run_examples();

std::string format_examples_table(const std::vector<ExampleCheck>& rows);

}  // namespace supent::harness
