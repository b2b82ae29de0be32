// Copyright 2026 The fzfeat Authors
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

#pragma once

#include <string>
#include <string_view>

#include "fzfeat/model.hpp"

namespace fzfeat {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Parses FlatZinc text. The result keeps declaration order and alias
// bindings as written; see resolve_aliases().
//
// Errors: ParseError (syntax, with line/column), ModelError (duplicate or
// undefined identifier, declaration/use type mismatch, missing solve item).
Model parse_flatzinc(std::string_view text, std::string source_path = {});

// parse_flatzinc() followed by resolve_aliases().
Model load_flatzinc(std::string_view text, std::string source_path = {});
Model load_flatzinc_file(const std::string& path);

// Pretty-prints a model as FlatZinc. parse_flatzinc(print_flatzinc(m)) == m.
std::string print_flatzinc(const Model& model);
std::string print_term(const Term& t);
std::string print_domain(const Domain& d);

}  // namespace fzfeat
