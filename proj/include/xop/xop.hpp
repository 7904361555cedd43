/*
   Copyright 2026 The xop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef XOP_XOP_HPP
#define XOP_XOP_HPP

#include "xop/asymptotics.hpp"
#include "xop/classical.hpp"
#include "xop/construct.hpp"
#include "xop/errors.hpp"
#include "xop/family.hpp"
#include "xop/mpreal.hpp"
#include "xop/partition.hpp"
#include "xop/poly.hpp"
#include "xop/quasi.hpp"
#include "xop/rational.hpp"
#include "xop/roots.hpp"

#endif  // XOP_XOP_HPP
