// Copyright 2026 The hsbasis Authors
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

#ifndef HSBASIS_HSBASIS_HPP
#define HSBASIS_HSBASIS_HPP

#include <hsbasis/core.hpp>
#include <hsbasis/random.hpp>
#include <hsbasis/bases.hpp>
#include <hsbasis/transforms.hpp>
#include <hsbasis/operators.hpp>
#include <hsbasis/identities.hpp>
#include <hsbasis/maps.hpp>

#endif  // HSBASIS_HSBASIS_HPP
