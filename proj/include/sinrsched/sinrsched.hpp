/*
Copyright 2026 The sinrsched Authors

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

#pragma once

#include "sinrsched/error.hpp"
#include "sinrsched/interference.hpp"
#include "sinrsched/io.hpp"
#include "sinrsched/multicolor.hpp"
#include "sinrsched/netgen.hpp"
#include "sinrsched/network.hpp"
#include "sinrsched/oracle.hpp"
#include "sinrsched/radio.hpp"
#include "sinrsched/reference.hpp"
#include "sinrsched/scheduler.hpp"
#include "sinrsched/sinr.hpp"
#include "sinrsched/sweep.hpp"
