// Copyright 2026 the submaj authors
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

#include "submaj/campaign.hpp"
#include "submaj/duality.hpp"
#include "submaj/hermitian_eig.hpp"
#include "submaj/inequalities.hpp"
#include "submaj/interpolation.hpp"
#include "submaj/json_io.hpp"
#include "submaj/matrix.hpp"
#include "submaj/matrix_functions.hpp"
#include "submaj/profile.hpp"
#include "submaj/rng.hpp"
#include "submaj/schur_eigenvalues.hpp"
#include "submaj/spectral_traces.hpp"
#include "submaj/svd.hpp"
