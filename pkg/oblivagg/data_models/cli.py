from typing import List, Literal, Optional, Tuple

from pydantic import conint, root_validator

from oblivagg.data_models.audit import DEFAULT_BUDGET
from oblivagg.data_models.base import BaseModel
from oblivagg.data_models.enum import SchemeEnum, TransportEnum
from oblivagg.data_models.session import SessionParams

TSubcommand = Literal["run", "audit", "rates", "demo-leakage"]


class CliConfig(BaseModel):
    """Validated command line configuration.

    Attributes:
        subcommand (TSubcommand): the command to dispatch to.
        n_users (int): number of users K.
        q (int): prime modulus.
        length (int): input length L.
        scheme (SchemeEnum): key/message design.
        drops (List[int]): users dropping before sending phase one.
        drops_after (List[int]): users dropping after sending phase one.
        seed (int): seed of the run. Defaults to 0 so that runs are reproducible.
        entropy (bool): ignore the seed and draw OS randomness.
        broadcast (bool): broadcast the server reply.
        transport (TransportEnum): simulated network or socket streams.
        shuffle (bool): deliver phase-one messages in a seeded random order.
        trials (int): number of seeded sessions for `run`.
        inputs (List[List[int]], optional): explicit inputs, one vector per user.
        survivors (List[int], optional): survivor set for `audit`.
        colluders (List[Tuple[int, ...]]): coalitions for `audit`.
        budget (int): enumeration budget in states.
        n_procs (int): worker processes for `audit`.
        preset (str, optional): leakage preset.
        alphabets (List[List[int]]): user supplied leakage alphabets.
        output (str, optional): path of the structured (json) report.
        keys_dir (str, optional): directory the key files of `run` are written to.
    """

    subcommand: TSubcommand
    n_users: int = 3
    q: int = 5
    length: int = 1
    scheme: SchemeEnum = SchemeEnum.DROPOUT_TOLERANT
    drops: List[int] = []
    drops_after: List[int] = []
    seed: conint(ge=0) = 0  # type: ignore
    entropy: bool = False
    broadcast: bool = False
    transport: TransportEnum = TransportEnum.SIM
    shuffle: bool = False
    trials: conint(ge=1) = 1  # type: ignore
    inputs: Optional[List[List[int]]] = None
    survivors: Optional[List[int]] = None
    colluders: List[Tuple[int, ...]] = []
    budget: conint(ge=1) = DEFAULT_BUDGET  # type: ignore
    n_procs: conint(ge=1) = 1  # type: ignore
    preset: Optional[Literal["three-user", "binary-f3", "all"]] = None
    alphabets: List[List[int]] = []
    output: Optional[str] = None
    keys_dir: Optional[str] = None

    @root_validator(skip_on_failure=True)
    def validate_session(cls, values):
        """Validates the session part of the config against `SessionParams`.

        Raises:
            ValueError: if K, q, L or the scheme are invalid, or drops and inputs do
                not fit the number of users.
        """
        if values["subcommand"] == "demo-leakage":
            return values
        params = SessionParams(
            n_users=values["n_users"],
            spec=values["q"],
            length=values["length"],
            scheme=values["scheme"],
            broadcast_reply=values["broadcast"],
        )
        for user in values["drops"] + values["drops_after"]:
            if user < 1 or user > params.n_users:
                raise ValueError(f"dropped user {user} is not in [1, {params.n_users}]")
        if values["inputs"] is not None and len(values["inputs"]) != params.n_users:
            raise ValueError(
                f"expected {params.n_users} input vectors, got {len(values['inputs'])}"
            )
        return values

    def session_params(self) -> SessionParams:
        return SessionParams(
            n_users=self.n_users,
            spec=self.q,
            length=self.length,
            scheme=self.scheme,
            broadcast_reply=self.broadcast,
        )
