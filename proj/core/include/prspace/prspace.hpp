/*
 * Copyright 2026 The prspace Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PRSPACE_PRSPACE_HPP_
#define PRSPACE_PRSPACE_HPP_

#include "prspace/aggregate.hpp"
#include "prspace/bounds.hpp"
#include "prspace/curves.hpp"
#include "prspace/errors.hpp"
#include "prspace/io.hpp"
#include "prspace/sampling.hpp"
#include "prspace/scores.hpp"
#include "prspace/svg.hpp"
#include "prspace/types.hpp"

#endif  // PRSPACE_PRSPACE_HPP_
