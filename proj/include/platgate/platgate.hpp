// Copyright 2026 The platgate Authors
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

#ifndef PLATGATE_PLATGATE_HPP
#define PLATGATE_PLATGATE_HPP

#include "platgate/cable.hpp"
#include "platgate/core.hpp"
#include "platgate/errors.hpp"
#include "platgate/fusion.hpp"
#include "platgate/gates1q.hpp"
#include "platgate/plat.hpp"
#include "platgate/search.hpp"

#endif  // PLATGATE_PLATGATE_HPP
