from typing import Any

import pandas as pd
from pydantic import BaseModel, ConfigDict

from .typing import Formato, Output


class Resultado(BaseModel):
    """Base para os objetos de resultado do ImunizacaoRedes.

    Os resultados são modelos `pydantic` imutáveis. O método `get` devolve o
    resultado como dicionário (`'json'`) ou como `DataFrame` (`'pandas'`).

    """

    model_config = ConfigDict(frozen=True)

    @property
    def json(self) -> dict[str, Any]:
        return self.model_dump(mode="json")

    @property
    def pandas(self) -> pd.DataFrame:
        return pd.json_normalize(self.json)

    def get(self, formato: Formato = "pandas") -> Output:
        match formato:
            case "json":
                return self.json
            case "pandas":
                return self.pandas
