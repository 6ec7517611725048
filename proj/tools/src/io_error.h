// Copyright 2026 The qfsm Authors
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


#ifndef QFSM_TOOLS_IO_ERROR_H
#define QFSM_TOOLS_IO_ERROR_H

#include "qfsm/errors.h"

namespace qfsm::cli {

/// A file could not be opened, read or written.
struct IoError : Error {
    using Error::Error;
};

}  // namespace qfsm::cli

#endif  // QFSM_TOOLS_IO_ERROR_H
