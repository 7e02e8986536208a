#include "conserv/builtin.hpp"

#include <string>

#include "conserv/errors.hpp"

namespace conserv {

namespace {

constexpr std::string_view kExample1 = R"json({
  "states": ["Rr", "Br", "Rb", "Bb"],
  "outcomes": [0, 1],
  "utility": {"kind": "linear"},
  "prior": ["1/2", "1/8", "1/8", "1/4"],
  "events": {
    "r": ["Rr", "Br"],
    "b": ["Rb", "Bb"],
    "R": ["Rr", "Rb"],
    "B": ["Br", "Bb"]
  },
  "delta": {"r": "1/4", "b": "3/4", "default": "1/2"},
  "acts": {
    "betR": [1, 0, 1, 0],
    "betB": [0, 1, 0, 1],
    "safe": [0.7, 0.7, 0.7, 0.7]
  },
  "grid": {"levels": 5, "cap": 625, "seed": 1}
}
)json";

constexpr std::string_view kExample3 = R"json({
  "states": ["Rr", "Br", "Rb", "Bb"],
  "outcomes": [0, 1],
  "utility": {"kind": "linear"},
  "priors": [
    ["4/10", "1/10", "2/10", "3/10"],
    ["3/10", "2/10", "3/10", "2/10"]
  ],
  "rule": "minkowski",
  "events": {
    "r": ["Rr", "Br"],
    "b": ["Rb", "Bb"],
    "R": ["Rr", "Rb"],
    "B": ["Br", "Bb"]
  },
  "delta": {"default": "1/2"},
  "acts": {
    "betR": [1, 0, 1, 0],
    "betB": [0, 1, 0, 1]
  },
  "grid": {"levels": 5, "cap": 625, "seed": 1}
}
)json";

}  // namespace

std::string_view builtin_scenario(std::string_view name) {
    if (name == "example1") return kExample1;
    if (name == "example3") return kExample3;
    throw ValidationError("scenario", "unknown built-in scenario \"" + std::string(name) + "\"");
}

std::vector<std::string_view> builtin_names() { return {"example1", "example3"}; }

}  // namespace conserv
