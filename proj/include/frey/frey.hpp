// Copyright 2026 The frey Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include "frey/arith.hpp"
#include "frey/certifier.hpp"
#include "frey/classifier.hpp"
#include "frey/corpus.hpp"
#include "frey/dimensions.hpp"
#include "frey/errors.hpp"
#include "frey/search.hpp"
#include "frey/weierstrass.hpp"
