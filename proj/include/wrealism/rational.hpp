// Copyright 2026 The wrealism Authors
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

#ifndef WREALISM_RATIONAL_HPP
#define WREALISM_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace wrealism {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational &r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational &r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace wrealism

#endif  // WREALISM_RATIONAL_HPP
