// Copyright 2026 The bellmp Authors
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

#include "bellmp/common.hpp"

#include <cctype>

namespace bellmp {

Setting parse_setting(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A': return Setting::A;
      case 'B': return Setting::B;
      case 'C': return Setting::C;
      default: break;
    }
  }
  throw InvalidArgument("unknown setting '" + std::string(text) + "', expected A, B or C");
}

}  // namespace bellmp
