"""
OpenTelemetry configuration and utilities for tracing long computations.
"""
import os
import sys
from typing import Optional
from opentelemetry import trace
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor, ConsoleSpanExporter
from opentelemetry.sdk.resources import Resource, SERVICE_NAME, DEPLOYMENT_ENVIRONMENT

SERVICE = "binform"
SERVICE_VERSION = "1.0.0"


def setup_tracing(
    service_name: str = SERVICE,
    environment: str = "development",
    console_spans: Optional[bool] = None,
    service_version: str = SERVICE_VERSION,
) -> trace.Tracer:
    """
    Configure OpenTelemetry tracing for the engine.

    Args:
        service_name: Name of the service for tracing
        environment: Deployment environment (e.g., 'development', 'ci')
        console_spans: Dump finished spans to stderr; defaults to BINFORM_CONSOLE_SPANS
        service_version: Version of the service

    Returns:
        A tracer bound to the configured provider
    """
    if console_spans is None:
        console_spans = os.getenv("BINFORM_CONSOLE_SPANS", "false").lower() == "true"

    resource = Resource.create({
        SERVICE_NAME: service_name,
        DEPLOYMENT_ENVIRONMENT: environment,
        "service.version": service_version,
    })
    provider = TracerProvider(resource=resource)

    # Console spans are noisy JSON dumps; never install them under pytest
    is_test = 'pytest' in sys.modules
    if console_spans and not is_test:
        provider.add_span_processor(BatchSpanProcessor(ConsoleSpanExporter(out=sys.stderr)))

    trace.set_tracer_provider(provider)
    return trace.get_tracer(service_name, service_version)


def get_tracer(name: Optional[str] = None) -> trace.Tracer:
    """Get a tracer instance."""
    return trace.get_tracer(name or __name__)


__all__ = [
    'setup_tracing',
    'get_tracer',
]
