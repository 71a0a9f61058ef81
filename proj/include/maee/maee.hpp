// SPDX-License-Identifier: Apache-2.0
//
// maee - energy-efficiency optimization for movable-antenna receivers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MAEE_MAEE_HPP
#define MAEE_MAEE_HPP

#include <maee/bench.hpp>
#include <maee/channel.hpp>
#include <maee/config.hpp>
#include <maee/ee.hpp>
#include <maee/harness.hpp>
#include <maee/instance_io.hpp>
#include <maee/oracle.hpp>
#include <maee/params.hpp>
#include <maee/search.hpp>
#include <maee/solver.hpp>

#endif // MAEE_MAEE_HPP
