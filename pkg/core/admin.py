from django.contrib import admin

from .models import StoredCertificate


@admin.register(StoredCertificate)
class StoredCertificateAdmin(admin.ModelAdmin):
    list_display = ['__str__', 'relation', 'strength', 'kind', 'verified', 'samples_tested', 'created_at']
    list_filter = ['relation', 'kind', 'verified']
    search_fields = ['source', 'target']
    readonly_fields = ['document', 'created_at', 'updated_at']
