from handlers.report_handlers import (
    diagnostic,
    dumps,
    envelope,
    jsonable,
    merge_events,
    merge_events_csv,
    merge_events_dot,
    write_json,
)
