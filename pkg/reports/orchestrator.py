import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Sequence, Tuple, TypedDict

import pandas as pd
from langgraph.graph import END, START, StateGraph
from tqdm import tqdm

from invariants.fixedRing import SCHEMA_ID
from reports.theoremCases import REGISTRY, get_case, run_case, validate_values

logger = logging.getLogger(__name__)


# State definition for a verification sweep
class VerifyState(TypedDict):
    requests: List[Dict[str, Any]]   # [{"case_id": ..., "values": [...]}]
    outcomes: List[Dict[str, Any]]   # CaseOutcome dumps, sorted by (case_id, value)
    table: List[Dict[str, Any]]      # pass/fail rows
    passed: bool
    status: str                      # Current status
    error: str                       # Error message (if any)
    next: str                        # Next node to execute


def _run_one(task: Tuple[str, int]) -> Dict[str, Any]:
    case_id, value = task
    return run_case(REGISTRY[case_id], value).model_dump()


class VerifyOrchestrator:
    """
    Runs TheoremCase sweeps as a small graph: a supervisor routes between the
    node that evaluates the cases and the node that tabulates them.

    Parameters:
    -----------
    jobs : int
        worker processes; 1 runs every case in this process
    progress : bool
        show a tqdm bar over cases
    """

    def __init__(self, jobs: int = 1, progress: bool = True):
        self.jobs = max(1, jobs)
        self.progress = progress
        self.graph = self._build_graph()

    def _build_graph(self):
        logger.info("Building verification graph")
        workflow = StateGraph(VerifyState)
        workflow.add_node("supervisor", self.supervisor)
        workflow.add_node("run_cases", self.run_cases)
        workflow.add_node("tabulate", self.tabulate)
        workflow.add_edge(START, "supervisor")
        workflow.add_conditional_edges(
            "supervisor",
            lambda x: x["next"],
            {"run_cases": "run_cases", "tabulate": "tabulate", END: END},
        )
        workflow.add_edge("run_cases", "supervisor")
        workflow.add_edge("tabulate", "supervisor")
        return workflow.compile()

    def supervisor(self, state: VerifyState) -> Dict[str, Any]:
        status = state.get("status")
        new_state = {"next": END, "status": status}
        if status == "initialized":
            logger.info("Supervisor: routing to case evaluation")
            new_state["next"] = "run_cases"
            new_state["status"] = "running"
        elif status == "cases_complete":
            logger.info("Supervisor: cases evaluated, routing to tabulation")
            new_state["next"] = "tabulate"
            new_state["status"] = "tabulating"
        elif status == "tabulation_complete":
            logger.info("Supervisor: sweep complete")
            new_state["status"] = "completed"
        elif status == "error":
            logger.error(f"Supervisor: Error encountered: {state.get('error')}")
        else:
            logger.warning(f"Supervisor: Unhandled state: {status}")
        return new_state

    def run_cases(self, state: VerifyState) -> Dict[str, Any]:
        tasks = [(request["case_id"], value) for request in state["requests"] for value in request["values"]]
        logger.info(f"Evaluating {len(tasks)} case instances with {self.jobs} worker(s)")
        try:
            if self.jobs == 1:
                outcomes = [_run_one(task) for task in tqdm(tasks, desc="verify", disable=not self.progress)]
            else:
                with ProcessPoolExecutor(max_workers=self.jobs) as pool:
                    outcomes = list(tqdm(pool.map(_run_one, tasks), total=len(tasks), desc="verify", disable=not self.progress))
        except Exception as e:
            logger.error(f"Error evaluating cases: {str(e)}")
            return {"status": "error", "error": str(e)}
        outcomes.sort(key=lambda row: (row["case_id"], row["value"]))
        return {"outcomes": outcomes, "status": "cases_complete"}

    def tabulate(self, state: VerifyState) -> Dict[str, Any]:
        frame = outcome_frame(state["outcomes"])
        passed = bool(frame["result"].eq("PASS").all()) if len(frame) else True
        logger.info(f"{int(frame['result'].eq('PASS').sum())} of {len(frame)} case instances pass")
        return {"table": frame.to_dict(orient="records"), "passed": passed, "status": "tabulation_complete"}

    def run(self, requests: Sequence[Dict[str, Any]]) -> VerifyState:
        """
        Run a sweep.

        Parameters:
        -----------
        requests : list of dict
            {"case_id": str, "values": list of int}; values are validated first

        Returns:
        --------
        VerifyState
            final state; status is "completed" or "error"
        """
        for request in requests:
            validate_values(get_case(request["case_id"]), request["values"])
        initial_state: VerifyState = {
            "requests": [dict(r) for r in requests],
            "outcomes": [],
            "table": [],
            "passed": False,
            "status": "initialized",
            "error": "",
            "next": "",
        }
        try:
            final_state = self.graph.invoke(initial_state, config={"recursion_limit": 25})
            logger.info("Verification workflow finished")
            return final_state
        except Exception as e:
            logger.error(f"Error during verification workflow: {str(e)}")
            return {**initial_state, "status": "error", "error": str(e)}


def outcome_frame(outcomes: Sequence[Dict[str, Any]]) -> pd.DataFrame:
    columns = ["case_id", "parameter", "value", "result", "observed"]
    if not outcomes:
        return pd.DataFrame(columns=columns)
    frame = pd.DataFrame(list(outcomes))
    frame["result"] = frame["passed"].map({True: "PASS", False: "FAIL"})
    return frame[columns]


def verify_document(state: VerifyState) -> Dict[str, Any]:
    return {"schema": SCHEMA_ID, "kind": "verify", "passed": bool(state.get("passed")), "outcomes": state.get("outcomes", [])}
