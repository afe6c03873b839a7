// Copyright 2026 The Matchcount Authors.
//
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

#ifndef MATCHCOUNT_ERROR_HPP_
#define MATCHCOUNT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace matchcount {

enum class ErrorCode {
  kInvalidParameters,  // builder parameters violate the kind's rules
  kInvalidHole,        // hole outside the region or duplicated
  kImbalance,          // color classes differ where the contract forbids it
  kMissingEmbedding,
  kDisconnected,
  kNotBipartite,
  kSizeBound,          // input exceeds a documented method bound
  kNotAnEdge,
  kZeroCount,
  kMalformedInput,     // bad JSON or unknown kind
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace matchcount

#endif  // MATCHCOUNT_ERROR_HPP_
