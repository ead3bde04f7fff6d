# Copyright 2026 the webcheck authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""HTML constraint validator: declarative rules evaluated over parsed documents.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._webcheck import (
    Checker,
    EvaluationIssue,
    Report,
    RuleEvaluationError,
    RuleSyntaxError,
    SourceResolutionError,
    Violation,
    WebcheckError,
    __version__,
    check_html,
    check_path,
    render_report,
    rulepack_names,
    rulepack_rules,
    rulepack_text,
    token_matches_pattern,
    validate_rules,
)

__all__ = [
    "Checker",
    "EvaluationIssue",
    "Report",
    "RuleEvaluationError",
    "RuleSyntaxError",
    "SourceResolutionError",
    "Violation",
    "WebcheckError",
    "__version__",
    "check_html",
    "check_path",
    "render_report",
    "rulepack_names",
    "rulepack_rules",
    "rulepack_text",
    "token_matches_pattern",
    "validate_rules",
]
