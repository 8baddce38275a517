import csv
import io

from src.positionalize.stages import StageTable


class CSVWriter:
    def write(self, filepath: str, headers: list[str], rows: list[list]) -> None:
        with open(filepath, 'w', newline='', encoding='utf-8') as csvfile:
            writer = csv.writer(csvfile)
            writer.writerow(headers)
            writer.writerows(rows)

    def to_text(self, headers: list[str], rows: list[list]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        return buffer.getvalue()

    def stage_rows(self, table: StageTable) -> tuple[list[str], list[list]]:
        return ["vertex", table.kind], [list(row) for row in table.rows()]
