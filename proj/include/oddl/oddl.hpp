// Copyright 2026 The ODDL Authors.
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

/// @file oddl.hpp
/// @brief Umbrella header for the whole library.

#pragma once

#include "oddl/analysis.hpp"
#include "oddl/ast.hpp"
#include "oddl/bundled.hpp"
#include "oddl/diagnostics.hpp"
#include "oddl/evaluator.hpp"
#include "oddl/format.hpp"
#include "oddl/imports.hpp"
#include "oddl/lexer.hpp"
#include "oddl/parser.hpp"
#include "oddl/printer.hpp"
#include "oddl/render.hpp"
#include "oddl/schema.hpp"
#include "oddl/semver.hpp"
#include "oddl/source.hpp"
#include "oddl/taxonomy.hpp"
#include "oddl/value.hpp"
#include "oddl/violation.hpp"
