# Copyright 2026 The pmtnsched Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Adapter for the external LP backend.

Usage: highs_solve.py MODEL.lp SOLUTION.sol

Reads a CPLEX-LP file, solves it with HiGHS and writes the solution file read
by pmtnsched: "status optimal|infeasible|unbounded", "objective <v>", then one
"c<i> <value>" line per nonzero column.
"""

import re
import sys

import highspy


def main(argv):
  if len(argv) != 3:
    print(__doc__.strip(), file=sys.stderr)
    return 2
  lp_path, sol_path = argv[1], argv[2]
  h = highspy.Highs()
  h.setOptionValue("output_flag", False)
  h.setOptionValue("presolve", "off")
  if h.readModel(lp_path) != highspy.HighsStatus.kOk:
    print("cannot read " + lp_path, file=sys.stderr)
    return 1
  h.run()
  status = h.getModelStatus()
  with open(sol_path, "w") as out:
    if status == highspy.HighsModelStatus.kOptimal:
      out.write("status optimal\n")
      out.write("objective %.17g\n" % h.getInfo().objective_function_value)
      values = h.getSolution().col_value
      lp = h.getLp()
      for i, name in enumerate(lp.col_names_):
        if not re.fullmatch(r"c\d+", name):
          continue
        if values[i] != 0.0:
          out.write("%s %.17g\n" % (name, values[i]))
    elif status == highspy.HighsModelStatus.kInfeasible:
      out.write("status infeasible\n")
    elif status == highspy.HighsModelStatus.kUnbounded:
      out.write("status unbounded\n")
    else:
      print("HiGHS status: " + h.modelStatusToString(status), file=sys.stderr)
      return 1
  return 0


if __name__ == "__main__":
  sys.exit(main(sys.argv))
